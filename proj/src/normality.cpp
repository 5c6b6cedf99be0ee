#include "toricgraph/normality.hpp"

#include <algorithm>
#include <unordered_set>

namespace toricgraph {

std::string to_string(NormalityReason r) {
  switch (r) {
    case NormalityReason::BipartiteAll: return "bipartite-all";
    case NormalityReason::SingleOddComponentOCC: return "single-odd-component-OCC";
    case NormalityReason::MultipleOddComponents: return "multiple-odd-components";
    case NormalityReason::OCCFailure: return "OCC-failure";
  }
  return "?";
}

std::string to_string(NormalityAgreement a) {
  switch (a) {
    case NormalityAgreement::Agree: return "agree";
    case NormalityAgreement::Disagree: return "disagree";
    case NormalityAgreement::Inconclusive: return "inconclusive";
  }
  return "?";
}

NormalityVerdict is_normal(const Graph& g) {
  const auto comps = connected_components(g);
  std::vector<int> comp_of(g.num_vertices() + 1, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);

  // Induced odd cycles grouped by component; a component is non-bipartite
  // iff it has one.
  std::vector<std::vector<std::vector<Vertex>>> by_comp(comps.size());
  for (auto& cyc : induced_odd_cycles(g)) by_comp[comp_of[cyc.front()]].push_back(std::move(cyc));

  std::vector<std::size_t> odd;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (!by_comp[c].empty()) odd.push_back(c);

  NormalityVerdict v;
  if (odd.empty()) {
    v.normal = true;
    v.reason = NormalityReason::BipartiteAll;
    return v;
  }
  if (odd.size() > 1) {
    v.normal = false;
    v.reason = NormalityReason::MultipleOddComponents;
    v.witness.emplace(by_comp[odd[0]].front(), by_comp[odd[1]].front());
    return v;
  }
  const auto& cycles = by_comp[odd.front()];
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      bool touch = false;
      for (Vertex a : cycles[i])
        for (Vertex b : cycles[j]) touch = touch || a == b || g.adjacent(a, b);
      if (!touch) {
        v.normal = false;
        v.reason = NormalityReason::OCCFailure;
        v.witness.emplace(cycles[i], cycles[j]);
        return v;
      }
    }
  v.normal = true;
  v.reason = NormalityReason::SingleOddComponentOCC;
  return v;
}

void require_normal(const Graph& g, const char* operation) {
  auto v = is_normal(g);
  if (!v.normal)
    throw NotNormalError(std::string(operation) + ": R_G is not normal (" + to_string(v.reason) + ")");
}

SupportForm zero_prime_form(int n) {
  IntVector c(n + 1, -1);
  c[n] = 2;
  return SupportForm(std::move(c));
}

bool p0_supporting_check(const Graph& g) {
  const auto f0 = zero_prime_form(g.num_vertices());
  for (const auto& gen : semigroup_generators(g)) {
    const Integer expected = 2 - static_cast<int>(gen.face.size());
    if (f0(gen.point) != expected) return false;
  }
  return true;
}

SaturationResult normality_oracle(const ToricCone& cone, int b_max) {
  if (b_max < 1) throw std::invalid_argument("normality_oracle: b_max must be at least 1");
  const int n = cone.n();
  const FormTable table(cone.facets);
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& g : cone.generators) gens.push_back(to_int64(g.point));

  using PointSet = std::unordered_set<SemigroupMonomial, SemigroupMonomialHash>;
  PointSet prev{SemigroupMonomial{std::vector<std::int64_t>(n, 0), 0}};
  SaturationResult result;
  result.max_degree = b_max;
  for (int b = 1; b <= b_max; ++b) {
    PointSet reached;
    for (const auto& s : slice_points(table, n, b, /*strict=*/false)) {
      bool expressible = false;
      SemigroupMonomial rest{s.exps, b - 1};
      for (const auto& p : gens) {
        bool fits = true;
        for (int i = 0; i < n; ++i) {
          rest.exps[i] = s.exps[i] - p[i];
          fits = fits && rest.exps[i] >= 0;
        }
        if (fits && prev.count(rest)) {
          expressible = true;
          break;
        }
      }
      if (!expressible) {
        result.outcome = SaturationResult::Outcome::Gap;
        result.gap = s;
        return result;
      }
      reached.insert(s);
    }
    prev = std::move(reached);
  }
  return result;
}

SaturationResult normality_oracle(const Graph& g, int b_max) {
  return normality_oracle(ToricCone::build(g), b_max);
}

NormalityAgreement check_normality_agreement(const Graph& g, int b_max) {
  const bool normal = is_normal(g).normal;
  const bool ok = normality_oracle(g, b_max).ok();
  if (normal) return ok ? NormalityAgreement::Agree : NormalityAgreement::Disagree;
  return ok ? NormalityAgreement::Inconclusive : NormalityAgreement::Agree;
}

}  // namespace toricgraph
