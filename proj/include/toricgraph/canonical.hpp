#pragma once

#include "toricgraph/cone.hpp"
#include "toricgraph/points.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace toricgraph {

// The canonical module of a normal R_G is spanned by the monomials lying in
// every height-one prime, i.e. by the lattice points on which every facet
// form is strictly positive. Every entry point below requires R_G normal and
// throws NotNormalError otherwise.

/// (a, b) lies in the normal semigroup: every facet form is >= 0 there.
bool semigroup_membership(const ToricCone& cone, const SemigroupMonomial& m);

struct OmegaSlice {
  int degree = 0;
  std::vector<SemigroupMonomial> points;  // lexicographic
};

OmegaSlice omega_slice(const ToricCone& cone, int b);

/// Semigroup points of degree b with every x-exponent >= 1: the degree-b
/// part of the intersection of Q_1, ..., Q_n. Intermediate object only.
std::vector<SemigroupMonomial> variable_prime_intersection_slice(const ToricCone& cone, int b);

/// dim_K (omega)_b for b = 0..b_max.
std::vector<std::size_t> omega_hilbert(const ToricCone& cone, int b_max);

class CanonicalModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PseudoGorensteinVerdict {
  bool pseudo_gorenstein = false;
  int initial_degree = 0;
  std::size_t slice_count = 0;
};

/// Scans b = 1..b_cap (default n + 2) for the first nonempty slice of omega;
/// pseudo-Gorenstein iff that slice has a single point. Throws
/// CanonicalModuleError if every slice up to the cap is empty.
PseudoGorensteinVerdict is_pseudo_gorenstein(const ToricCone& cone, std::optional<int> b_cap = {});

struct OmegaGenerators {
  std::vector<SemigroupMonomial> generators;  // by degree, then lexicographic
  int max_degree = 0;
  /// Minimal generators of omega have degree at most dim R_G = n + 1, so the
  /// list is complete whenever max_degree >= n + 1.
  bool truncated = false;
};

/// Interior points s with t-degree <= b_max such that s - p_F is interior for
/// no generator p_F (subtracting p_{} included).
OmegaGenerators omega_generators(const ToricCone& cone, int b_max);

}  // namespace toricgraph
