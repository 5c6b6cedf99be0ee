#include "toricgraph/oracle.hpp"

#include "toricgraph/canonical.hpp"
#include "toricgraph/normality.hpp"
#include "toricgraph/points.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace toricgraph {

namespace {

using Row = std::vector<std::int64_t>;

void normalize_row(Row& r) {
  std::int64_t g = 0;
  for (auto x : r) g = std::gcd(g, std::abs(x));
  if (g > 1)
    for (auto& x : r) x /= g;
  for (auto x : r)
    if (std::abs(x) > (std::int64_t{1} << 30)) throw std::overflow_error("brute_facets: entry growth");
}

/// Gauss-Jordan basis kept fully reduced: each row owns a pivot column that is
/// zero in every other row.
struct Echelon {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;

  bool add(Row v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto pc = pivots[i];
      if (v[pc] == 0) continue;
      const auto a = rows[i][pc], b = v[pc];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = a * v[k] - b * rows[i][k];
      normalize_row(v);
    }
    auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (it == v.end()) return false;
    const auto pc = static_cast<std::size_t>(it - v.begin());
    for (auto& r : rows) {
      if (r[pc] == 0) continue;
      const auto a = v[pc], b = r[pc];
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = a * r[k] - b * v[k];
      normalize_row(r);
    }
    rows.push_back(std::move(v));
    pivots.push_back(pc);
    return true;
  }

  /// For d - 1 independent rows in dimension d: the kernel generator.
  Row normal() const {
    const std::size_t d = rows.front().size();
    std::vector<char> is_pivot(d, 0);
    for (auto pc : pivots) is_pivot[pc] = 1;
    const auto free_col = static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), 0) - is_pivot.begin());
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) scale = std::lcm(scale, std::abs(rows[i][pivots[i]]));
    Row x(d, 0);
    x[free_col] = scale;
    for (std::size_t i = 0; i < rows.size(); ++i)
      x[pivots[i]] = -rows[i][free_col] * (scale / rows[i][pivots[i]]);
    normalize_row(x);
    return x;
  }
};

using PointSet = std::unordered_set<SemigroupMonomial, SemigroupMonomialHash>;

SemigroupMonomial to_monomial(const IntVector& p) {
  auto v = to_int64(p);
  SemigroupMonomial m;
  m.t_deg = v.back();
  v.pop_back();
  m.exps = std::move(v);
  return m;
}

SemigroupMonomial add(const SemigroupMonomial& a, const SemigroupMonomial& b) {
  SemigroupMonomial s{a.exps, a.t_deg + b.t_deg};
  for (std::size_t i = 0; i < s.exps.size(); ++i) s.exps[i] += b.exps[i];
  return s;
}

/// Degree-graded semigroup: layers[k] holds the products of k generators.
std::vector<PointSet> semigroup_layers(const std::vector<SemigroupMonomial>& gens, int d_max) {
  std::vector<PointSet> layers(d_max + 1);
  layers[0].insert(SemigroupMonomial{std::vector<std::int64_t>(gens.front().exps.size(), 0), 0});
  for (int k = 1; k <= d_max; ++k)
    for (const auto& w : layers[k - 1])
      for (const auto& g : gens) layers[k].insert(add(w, g));
  return layers;
}

/// In-ideal flags: u of degree k lies in the ideal generated by `ideal_gens`
/// iff u - g lies in layer k - 1 for some ideal generator g.
bool in_ideal(const SemigroupMonomial& u, const std::vector<SemigroupMonomial>& ideal_gens,
              const std::vector<PointSet>& layers) {
  if (u.t_deg == 0) return false;
  SemigroupMonomial rest{u.exps, u.t_deg - 1};
  for (const auto& g : ideal_gens) {
    bool fits = true;
    for (std::size_t i = 0; i < u.exps.size(); ++i) {
      rest.exps[i] = u.exps[i] - g.exps[i];
      fits = fits && rest.exps[i] >= 0;
    }
    if (fits && layers[u.t_deg - 1].count(rest)) return true;
  }
  return false;
}

std::vector<SemigroupMonomial> monomials_of(const std::vector<Generator>& gens,
                                            const std::vector<FaceLabel>& faces) {
  std::vector<SemigroupMonomial> out;
  for (const auto& g : gens)
    if (std::find(faces.begin(), faces.end(), g.face) != faces.end()) out.push_back(to_monomial(g.point));
  return out;
}

std::vector<SemigroupMonomial> all_monomials(const std::vector<Generator>& gens) {
  std::vector<SemigroupMonomial> out;
  for (const auto& g : gens) out.push_back(to_monomial(g.point));
  return out;
}

std::string graph_label(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.num_vertices() << " E=";
  for (auto [u, v] : g.edges()) os << u << '-' << v << ' ';
  auto s = os.str();
  s.pop_back();
  return s;
}

OracleReport report_for(std::string subject, const Graph& g) {
  OracleReport r;
  r.subject = std::move(subject);
  r.instance = graph_label(g);
  return r;
}

}  // namespace

std::uint64_t brute_facets_work(std::size_t num_points, std::size_t dim) {
  if (dim == 0 || dim - 1 > num_points) return 0;
  std::uint64_t c = 1;
  const std::size_t k = dim - 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (num_points - k + i) / i;
  return c;
}

std::vector<SupportForm> brute_facets(const std::vector<IntVector>& points) {
  if (points.empty()) return {};
  const std::size_t d = points.front().size();
  std::vector<Row> pts;
  for (const auto& p : points) pts.push_back(to_int64(p));
  std::set<Row> found;

  auto consider = [&](const Row& f) {
    bool has_pos = false, has_neg = false;
    for (const auto& p : pts) {
      std::int64_t v = 0;
      for (std::size_t k = 0; k < d; ++k) v += f[k] * p[k];
      has_pos = has_pos || v > 0;
      has_neg = has_neg || v < 0;
    }
    if (has_pos && has_neg) return;
    Row g = f;
    if (has_neg)
      for (auto& x : g) x = -x;
    found.insert(std::move(g));
  };

  auto rec = [&](auto&& self, std::size_t start, const Echelon& ech) -> void {
    if (ech.rows.size() + 1 == d) {
      consider(ech.normal());
      return;
    }
    const std::size_t need = d - 1 - ech.rows.size();
    for (std::size_t i = start; i + need <= pts.size(); ++i) {
      Echelon next = ech;
      if (next.add(pts[i])) self(self, i + 1, next);
    }
  };
  rec(rec, 0, Echelon{});

  std::vector<SupportForm> out;
  for (const auto& f : found) out.emplace_back(IntVector(f.begin(), f.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexCover> brute_minimal_covers(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("brute_minimal_covers: at most 24 vertices");
  std::vector<std::uint32_t> edge_masks;
  for (auto [u, v] : g.edges()) edge_masks.push_back((1u << (u - 1)) | (1u << (v - 1)));
  auto covers = [&](std::uint32_t s) {
    return std::all_of(edge_masks.begin(), edge_masks.end(), [s](auto e) { return (s & e) != 0; });
  };
  std::vector<VertexCover> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if ((s >> v & 1) && covers(s & ~(1u << v))) minimal = false;
    if (!minimal) continue;
    VertexCover c;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) c.push_back(v + 1);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_prime_test(const std::vector<FaceLabel>& generator_faces,
                      const std::vector<Generator>& gens, int d_max) {
  const auto layers = semigroup_layers(all_monomials(gens), d_max);
  const auto ideal_gens = monomials_of(gens, generator_faces);
  std::vector<std::vector<SemigroupMonomial>> outside(d_max + 1);
  for (int k = 0; k <= d_max; ++k)
    for (const auto& u : layers[k])
      if (!in_ideal(u, ideal_gens, layers)) outside[k].push_back(u);
  for (int i = 1; i <= d_max; ++i)
    for (int j = i; i + j <= d_max; ++j)
      for (const auto& u : outside[i])
        for (const auto& v : outside[j])
          if (in_ideal(add(u, v), ideal_gens, layers)) return false;
  return true;
}

bool brute_prime_test(const MonomialPrime& prime, const std::vector<Generator>& gens, int d_max) {
  if (!brute_prime_test(prime.generator_faces, gens, d_max)) return false;
  const auto layers = semigroup_layers(all_monomials(gens), d_max);
  const auto ideal_gens = monomials_of(gens, prime.generator_faces);
  for (int k = 0; k <= d_max; ++k)
    for (const auto& u : layers[k])
      if (in_ideal(u, ideal_gens, layers) != (prime.form(u.as_vector()) > 0)) return false;
  return true;
}

std::vector<std::size_t> brute_omega_hilbert(const Graph& g, int b_max) {
  require_normal(g, "brute_omega_hilbert");
  const auto gens = semigroup_generators(g);
  const auto layers = semigroup_layers(all_monomials(gens), b_max);
  std::vector<std::vector<SemigroupMonomial>> prime_gens;
  // Exhaustive facets where affordable, so the prime list is independent of
  // the double description code as well.
  const auto facets = brute_facets_work(gens.size(), g.num_vertices() + 1) <= 2'000'000
                          ? brute_facets(points_of(gens))
                          : facet_support_forms(gens);
  for (const auto& f : facets)
    prime_gens.push_back(monomials_of(gens, prime_of_form(f, gens).generator_faces));
  std::vector<std::size_t> counts;
  for (int b = 0; b <= b_max; ++b) {
    std::size_t c = 0;
    for (const auto& u : layers[b])
      if (std::all_of(prime_gens.begin(), prime_gens.end(),
                      [&](const auto& pg) { return in_ideal(u, pg, layers); }))
        ++c;
    counts.push_back(c);
  }
  return counts;
}

OracleReport check_facets(const Graph& g, std::uint64_t work_limit) {
  OracleReport r = report_for("facet_support_forms", g);
  const auto gens = semigroup_generators(g);
  if (brute_facets_work(gens.size(), g.num_vertices() + 1) > work_limit) {
    r.skipped = true;
    r.note = "too many generator subsets for exhaustion";
    return r;
  }
  const auto fast = facet_support_forms(gens);
  const auto slow = brute_facets(points_of(gens));
  if (fast != slow) {
    r.agreement = false;
    r.discrepancy = "double description found " + std::to_string(fast.size()) +
                    " facets, exhaustion found " + std::to_string(slow.size());
  }
  return r;
}

OracleReport check_minimal_covers(const Graph& g) {
  OracleReport r = report_for("minimal_vertex_covers", g);
  if (g.num_vertices() > 24) {
    r.skipped = true;
    r.note = "more than 24 vertices";
    return r;
  }
  const auto fast = minimal_vertex_covers(g);
  const auto slow = brute_minimal_covers(g);
  if (fast != slow) {
    r.agreement = false;
    r.discrepancy = "Bron-Kerbosch found " + std::to_string(fast.size()) + " covers, subset scan found " +
                    std::to_string(slow.size());
  }
  return r;
}

OracleReport check_prime_closure(const Graph& g, int d_max) {
  OracleReport r = report_for("height_one_primes", g);
  const auto gens = semigroup_generators(g);
  for (const auto& f : facet_support_forms(gens)) {
    if (!brute_prime_test(prime_of_form(f, gens), gens, d_max)) {
      r.agreement = false;
      r.discrepancy = "facet " + to_string(f.coeffs()) + " fails the bounded primality test";
      return r;
    }
  }
  return r;
}

OracleReport check_omega_hilbert(const Graph& g, int b_max) {
  OracleReport r = report_for("omega_hilbert", g);
  const auto fast = omega_hilbert(ToricCone::build(g), b_max);
  const auto slow = brute_omega_hilbert(g, b_max);
  if (fast != slow) {
    r.agreement = false;
    std::ostringstream os;
    os << "interior counts";
    for (auto c : fast) os << ' ' << c;
    os << " vs ideal intersection";
    for (auto c : slow) os << ' ' << c;
    r.discrepancy = os.str();
  }
  return r;
}

OracleReport check_normality(const Graph& g, int b_max) {
  OracleReport r = report_for("is_normal", g);
  switch (check_normality_agreement(g, b_max)) {
    case NormalityAgreement::Agree: break;
    case NormalityAgreement::Disagree:
      r.agreement = false;
      r.discrepancy = "combinatorial verdict and bounded saturation check disagree";
      break;
    case NormalityAgreement::Inconclusive:
      r.note = "inconclusive: no saturation gap up to degree " + std::to_string(b_max);
      break;
  }
  return r;
}

}  // namespace toricgraph
