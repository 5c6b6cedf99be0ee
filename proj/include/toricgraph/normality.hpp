#pragma once

#include "toricgraph/graph.hpp"
#include "toricgraph/points.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toricgraph {

/// Raised by operations that are only meaningful when R_G is normal.
class NotNormalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NormalityReason { BipartiteAll, SingleOddComponentOCC, MultipleOddComponents, OCCFailure };

std::string to_string(NormalityReason r);

struct NormalityVerdict {
  bool normal = false;
  NormalityReason reason = NormalityReason::BipartiteAll;
  /// Two vertex-disjoint induced odd cycles with no edge between them;
  /// present exactly when the graph is not normal.
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> witness;
};

/// R_G is normal iff at most one component is non-bipartite and that
/// component satisfies the odd cycle condition.
NormalityVerdict is_normal(const Graph& g);

/// Throws NotNormalError unless is_normal(g).
void require_normal(const Graph& g, const char* operation);

/// Certificate that P_0 = (t, x_1 t, ..., x_n t) is a monomial prime: the form
/// f_0 = -sum x_i + 2 x_{n+1} takes the values 2 on p_{}, 1 on every vertex
/// and 0 on every edge. Holds for every graph, normal or not.
bool p0_supporting_check(const Graph& g);

/// The form f_0 above.
SupportForm zero_prime_form(int n);

struct SaturationResult {
  enum class Outcome { Ok, Gap };
  Outcome outcome = Outcome::Ok;
  /// Smallest-degree, then lexicographically first, cone point that is not a
  /// sum of generators.
  std::optional<SemigroupMonomial> gap;
  int max_degree = 0;

  bool ok() const { return outcome == Outcome::Ok; }
};

/// Bounded saturation check: every lattice point of the cone with
/// t-coordinate <= b_max must be a sum of semigroup generators. The cone is
/// described by its facet forms, which do not presuppose normality.
SaturationResult normality_oracle(const Graph& g, int b_max);
SaturationResult normality_oracle(const ToricCone& cone, int b_max);

/// Comparison of is_normal against the bounded oracle. Inconclusive means
/// the graph is not normal but no gap appeared up to the bound.
enum class NormalityAgreement { Agree, Disagree, Inconclusive };
std::string to_string(NormalityAgreement a);
NormalityAgreement check_normality_agreement(const Graph& g, int b_max);

}  // namespace toricgraph
