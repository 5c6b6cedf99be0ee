#include "toricgraph/canonical.hpp"

#include "toricgraph/normality.hpp"

#include <unordered_set>

namespace toricgraph {

bool semigroup_membership(const ToricCone& cone, const SemigroupMonomial& m) {
  require_normal(cone.graph, "semigroup_membership");
  if (static_cast<int>(m.exps.size()) != cone.n())
    throw std::invalid_argument("semigroup_membership: exponent vector has the wrong length");
  return FormTable(cone.facets).nonnegative(m);
}

OmegaSlice omega_slice(const ToricCone& cone, int b) {
  require_normal(cone.graph, "omega_slice");
  if (b < 0) throw std::invalid_argument("omega_slice: negative degree");
  return {b, slice_points(FormTable(cone.facets), cone.n(), b, /*strict=*/true)};
}

std::vector<SemigroupMonomial> variable_prime_intersection_slice(const ToricCone& cone, int b) {
  require_normal(cone.graph, "variable_prime_intersection_slice");
  auto pts = slice_points(FormTable(cone.facets), cone.n(), b, /*strict=*/false);
  std::erase_if(pts, [](const SemigroupMonomial& m) {
    for (auto a : m.exps)
      if (a < 1) return true;
    return false;
  });
  return pts;
}

std::vector<std::size_t> omega_hilbert(const ToricCone& cone, int b_max) {
  require_normal(cone.graph, "omega_hilbert");
  const FormTable table(cone.facets);
  std::vector<std::size_t> counts;
  for (int b = 0; b <= b_max; ++b) counts.push_back(slice_points(table, cone.n(), b, true).size());
  return counts;
}

PseudoGorensteinVerdict is_pseudo_gorenstein(const ToricCone& cone, std::optional<int> b_cap) {
  require_normal(cone.graph, "is_pseudo_gorenstein");
  const int cap = b_cap.value_or(cone.n() + 2);
  const FormTable table(cone.facets);
  for (int b = 1; b <= cap; ++b) {
    const auto pts = slice_points(table, cone.n(), b, true);
    if (!pts.empty()) return {pts.size() == 1, b, pts.size()};
  }
  throw CanonicalModuleError("is_pseudo_gorenstein: no interior lattice point up to degree " +
                             std::to_string(cap));
}

OmegaGenerators omega_generators(const ToricCone& cone, int b_max) {
  require_normal(cone.graph, "omega_generators");
  const int n = cone.n();
  const FormTable table(cone.facets);
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& g : cone.generators) gens.push_back(to_int64(g.point));

  OmegaGenerators out;
  out.max_degree = b_max;
  out.truncated = b_max < n + 1;
  std::unordered_set<SemigroupMonomial, SemigroupMonomialHash> below;
  for (int b = 1; b <= b_max; ++b) {
    std::unordered_set<SemigroupMonomial, SemigroupMonomialHash> here;
    for (const auto& s : slice_points(table, n, b, true)) {
      bool minimal = true;
      SemigroupMonomial rest{s.exps, b - 1};
      for (const auto& p : gens) {
        bool fits = true;
        for (int i = 0; i < n; ++i) {
          rest.exps[i] = s.exps[i] - p[i];
          fits = fits && rest.exps[i] >= 0;
        }
        if (fits && below.count(rest)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.generators.push_back(s);
      here.insert(s);
    }
    below = std::move(here);
  }
  return out;
}

}  // namespace toricgraph
