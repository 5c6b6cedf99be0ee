#pragma once

#include "toricgraph/primes.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace toricgraph {

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Cl(R_G) presented by the r primes containing t, modulo the single
/// relation sum_i c_{i,n+1} [P_i] = 0.
struct ClassGroupPresentation {
  std::size_t r = 0;
  IntVector relation;  // rho_i = c_{i,n+1}
  std::size_t rank = 0;
  std::vector<Integer> relation_invariants;  // Smith invariants of rho as a 1 x r matrix
};

/// A divisor class as coefficients on [P_1..P_r], read modulo Z rho.
struct DivisorClass {
  IntVector coeffs;
};

/// Forms of the primes containing t, in the order height_one_primes gives.
std::vector<SupportForm> t_prime_forms(const std::vector<ClassifiedPrime>& primes);

/// Throws InvariantViolation unless every rho_i >= 1 and gcd(rho) = 1.
ClassGroupPresentation class_group(const std::vector<SupportForm>& t_forms);

/// [Q_j] = -sum_i c_{i,j} [P_i], 1 <= j <= n.
DivisorClass q_class(Vertex j, const std::vector<SupportForm>& t_forms);

/// kappa_i = 1 - sum_{j=1..n} c_{i,j}.
DivisorClass canonical_class(const std::vector<SupportForm>& t_forms);

/// u - v is an integer multiple of rho.
bool equivalent(const DivisorClass& u, const DivisorClass& v, const ClassGroupPresentation& cl);

/// The integer a with c = a rho, if any.
std::optional<Integer> multiple_of_relation(const DivisorClass& c, const ClassGroupPresentation& cl);

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);

struct GorensteinVerdict {
  bool gorenstein = false;
  std::optional<Integer> a;  // kappa = a * rho
  /// Unmixedness verdict, present for connected bipartite graphs.
  std::optional<bool> bipartite_fast_path;
  /// (n odd and unmixed), present for connected non-bipartite graphs whose
  /// primes containing t are exactly the P_C and P_0.
  std::optional<bool> odd_cycle_fast_path;
  bool fast_paths_agree = true;
};

/// The canonical class vanishes, i.e. kappa is an integer multiple of rho.
/// Fast-path verdicts are computed alongside and a disagreement throws
/// InvariantViolation. Throws NotNormalError for non-normal R_G.
GorensteinVerdict is_gorenstein(const Graph& g);
GorensteinVerdict is_gorenstein(const Graph& g, const std::vector<ClassifiedPrime>& primes);

}  // namespace toricgraph
