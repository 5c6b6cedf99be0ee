#pragma once

#include "toricgraph/cone.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/primes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricgraph {

// Brute-force re-derivations, deliberately sharing no code path with the
// main algorithms: machine-integer Gauss-Jordan instead of the exact lattice
// routines, subset enumeration instead of Bron-Kerbosch, and semigroup
// sumsets instead of facet inequalities.

struct OracleReport {
  std::string subject;
  std::string instance;
  bool agreement = true;
  std::optional<std::string> discrepancy;  // present iff !agreement
  bool skipped = false;                    // instance too large for the oracle
  std::optional<std::string> note;
};

/// Every hyperplane through d - 1 linearly independent generators that keeps
/// all generators on one side. Exhaustive over (d-1)-subsets.
std::vector<SupportForm> brute_facets(const std::vector<IntVector>& points);

/// Number of (d-1)-subsets brute_facets would visit.
std::uint64_t brute_facets_work(std::size_t num_points, std::size_t dim);

/// All subsets filtered for covering and minimality. n <= 24.
std::vector<VertexCover> brute_minimal_covers(const Graph& g);

/// Bounded primality test for the monomial ideal generated by x_F t, F in
/// `generator_faces`: the monomials outside the ideal must be closed under
/// products, checked for all products of at most d_max generators.
bool brute_prime_test(const std::vector<FaceLabel>& generator_faces,
                      const std::vector<Generator>& gens, int d_max);

/// As above, and additionally that a monomial lies in the ideal iff the
/// prime's form is strictly positive on it, within the same bound.
bool brute_prime_test(const MonomialPrime& prime, const std::vector<Generator>& gens, int d_max);

/// dim_K (omega)_b computed by intersecting the height-one primes as explicit
/// monomial ideals of the semigroup, degree by degree.
std::vector<std::size_t> brute_omega_hilbert(const Graph& g, int b_max);

OracleReport check_facets(const Graph& g, std::uint64_t work_limit = 5'000'000);
OracleReport check_minimal_covers(const Graph& g);
OracleReport check_prime_closure(const Graph& g, int d_max);
OracleReport check_omega_hilbert(const Graph& g, int b_max);
OracleReport check_normality(const Graph& g, int b_max);

}  // namespace toricgraph
