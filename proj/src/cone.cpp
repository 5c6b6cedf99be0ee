#include "toricgraph/cone.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace toricgraph {

std::string FaceLabel::str() const {
  switch (kind) {
    case Kind::Empty: return "{}";
    case Kind::Vertex: return "{" + std::to_string(u) + "}";
    case Kind::Edge: return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
  }
  return {};
}

SupportForm::SupportForm(IntVector coeffs) : coeffs_(primitive_normalize(coeffs)) {}

std::vector<Generator> semigroup_generators(const Graph& g) {
  const int n = g.num_vertices();
  auto point = [n](const FaceLabel& f) {
    IntVector p(n + 1, 0);
    p[n] = 1;
    if (f.kind != FaceLabel::Kind::Empty) p[f.u - 1] = 1;
    if (f.kind == FaceLabel::Kind::Edge) p[f.v - 1] = 1;
    return p;
  };
  std::vector<Generator> gens;
  gens.reserve(1 + n + g.num_edges());
  gens.push_back({FaceLabel::empty(), point(FaceLabel::empty())});
  for (Vertex i = 1; i <= n; ++i) gens.push_back({FaceLabel::vertex(i), point(FaceLabel::vertex(i))});
  for (auto [u, v] : g.edges()) gens.push_back({FaceLabel::edge(u, v), point(FaceLabel::edge(u, v))});
  return gens;
}

std::vector<IntVector> points_of(const std::vector<Generator>& gens) {
  std::vector<IntVector> pts;
  pts.reserve(gens.size());
  for (const auto& g : gens) pts.push_back(g.point);
  return pts;
}

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct Ray {
  IntVector form;
  ZeroSet zeros;  // inserted points on which the form vanishes
};

}  // namespace

std::vector<SupportForm> facet_support_forms(const std::vector<IntVector>& points) {
  if (points.empty()) throw ConeError("facet enumeration: no generators");
  const std::size_t d = points.front().size();
  const std::size_t m = points.size();
  for (const auto& p : points)
    if (p.size() != d) throw ConeError("facet enumeration: generators of mixed dimension");

  // Greedy basis in insertion order.
  std::vector<std::size_t> basis;
  std::vector<IntVector> basis_rows;
  for (std::size_t i = 0; i < m && basis.size() < d; ++i) {
    basis_rows.push_back(points[i]);
    if (rank(IntMatrix::from_rows(basis_rows)) == basis_rows.size())
      basis.push_back(i);
    else
      basis_rows.pop_back();
  }
  if (basis.size() < d)
    throw ConeError("facet enumeration: generators span a cone of dimension " +
                    std::to_string(basis.size()) + " < " + std::to_string(d));

  // Facets of the simplicial starting cone: one per basis point, vanishing on
  // all the others.
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) others.push_back(basis_rows[j]);
    auto ker = kernel_basis(IntMatrix(others, d));
    if (ker.size() != 1) throw ConeError("facet enumeration: degenerate starting simplex");
    IntVector f = primitive_normalize(ker.front());
    if (dot(f, basis_rows[k]) < 0)
      for (auto& x : f) x = -x;
    ZeroSet z(m);
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) z.set(basis[j]);
    rays.push_back({std::move(f), std::move(z)});
  }

  std::vector<char> inserted(m, 0);
  for (auto i : basis) inserted[i] = 1;

  for (std::size_t x = 0; x < m; ++x) {
    if (inserted[x]) continue;
    inserted[x] = 1;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rays[r].form, points[x]);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
      else rays[r].zeros.set(x);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(rays[r]);

    for (auto p : pos) {
      for (auto q : neg) {
        ZeroSet common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < d) continue;
        // Combinatorial adjacency: no third ray vanishes on all of `common`.
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        IntVector h(d);
        for (std::size_t k = 0; k < d; ++k) h[k] = val[p] * rays[q].form[k] - val[q] * rays[p].form[k];
        common.set(x);
        next.push_back({primitive_normalize(h), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<SupportForm> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.emplace_back(std::move(r.form));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SupportForm> facet_support_forms(const std::vector<Generator>& gens) {
  return facet_support_forms(points_of(gens));
}

std::vector<FaceLabel> face_of_form(const SupportForm& f, const std::vector<Generator>& gens) {
  std::vector<FaceLabel> out;
  for (const auto& g : gens) {
    Integer v = f(g.point);
    if (v < 0) throw ConeError("form " + to_string(f.coeffs()) + " is negative on " + g.face.str());
    if (v == 0) out.push_back(g.face);
  }
  return out;
}

bool is_supporting(const SupportForm& f, const std::vector<Generator>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Generator& g) { return f(g.point) >= 0; });
}

std::size_t zero_set_rank(const SupportForm& f, const std::vector<Generator>& gens) {
  std::vector<IntVector> rows;
  for (const auto& g : gens)
    if (f(g.point) == 0) rows.push_back(g.point);
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(std::move(rows)));
}

ToricCone ToricCone::build(const Graph& g) {
  ToricCone c{g, semigroup_generators(g), {}};
  c.facets = facet_support_forms(c.generators);
  return c;
}

}  // namespace toricgraph
