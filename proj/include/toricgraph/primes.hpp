#pragma once

#include "toricgraph/cone.hpp"
#include "toricgraph/graph.hpp"

#include <string>
#include <vector>

namespace toricgraph {

/// A monomial prime of R_G given by a supporting form f: it is generated by
/// the x_F t with f(p_F) > 0.
struct MonomialPrime {
  SupportForm form;
  std::vector<FaceLabel> generator_faces;  // faces with f(p_F) > 0, generator order
  bool contains_t = false;                 // f(p_{}) > 0, i.e. c_{n+1} > 0
};

MonomialPrime prime_of_form(const SupportForm& f, const std::vector<Generator>& gens);

/// Which of the named families a height-one prime belongs to.
struct PrimeKind {
  enum class Tag { Cover, Zero, Exceptional, Variable };
  Tag tag = Tag::Exceptional;
  VertexCover cover;  // Tag::Cover
  Vertex vertex = 0;  // Tag::Variable

  static PrimeKind cover_prime(VertexCover c) { return {Tag::Cover, std::move(c), 0}; }
  static PrimeKind variable_prime(Vertex i) { return {Tag::Variable, {}, i}; }
  static PrimeKind zero_prime() { return {Tag::Zero, {}, 0}; }
  static PrimeKind exceptional() { return {Tag::Exceptional, {}, 0}; }

  std::string name() const;  // "cover", "variable", "zero", "exceptional"
  std::string str() const;   // e.g. "P_{1,3}", "Q_2", "P_0", "exceptional"
  auto operator<=>(const PrimeKind&) const = default;
};

struct ClassifiedPrime {
  MonomialPrime prime;
  PrimeKind kind;
};

/// Matches the zero face of a facet prime against the named patterns in the
/// order ZeroPrime, VariablePrime, CoverPrime; anything else is Exceptional.
PrimeKind classify_prime(const MonomialPrime& p, const Graph& g);

/// One prime per facet of the cone. Ordered: cover primes (by cover), the
/// zero prime, exceptional primes (by form), then Q_1..Q_n; so every prime
/// containing t precedes those that do not. Throws NotNormalError when R_G is
/// not normal.
std::vector<ClassifiedPrime> height_one_primes(const Graph& g);
std::vector<ClassifiedPrime> height_one_primes(const ToricCone& cone);

/// f_C = -sum_{i not in C} x_i + x_{n+1}.
SupportForm cover_form(int n, const VertexCover& c);

struct CoverPrime {
  MonomialPrime prime;
  bool minimal = false;  // only minimal covers give height-one primes
};

/// P_C for any vertex cover C; throws std::invalid_argument if C is not one.
CoverPrime cover_prime(const Graph& g, const VertexCover& c);

struct PrimePrediction {
  std::vector<PrimeKind> kinds;  // sorted
  /// "Gconnected" (bipartite), "unicyclic" (whiskered odd cycle) or
  /// "inclusion-only" (a lower bound for other non-bipartite graphs).
  std::string theorem_tag;
  bool exact = false;
};

/// The prime set the structural results predict for a connected graph with
/// R_G normal. Throws std::invalid_argument when disconnected.
PrimePrediction predicted_prime_set(const Graph& g);

std::vector<PrimeKind> kinds_of(const std::vector<ClassifiedPrime>& primes);

/// Observed kinds equal the predicted ones (for an inclusion-only prediction:
/// equal to the lower bound, which probes the open converse).
bool prime_set_equals_prediction(const std::vector<ClassifiedPrime>& primes,
                                 const PrimePrediction& prediction);
bool prime_set_includes_prediction(const std::vector<ClassifiedPrime>& primes,
                                   const PrimePrediction& prediction);

/// For an induced odd cycle and a vertex v neither on it nor adjacent to it,
/// the form -sum_{i not in N(v), i != v} x_i - 2 x_v + 2 x_{n+1}. It supports
/// the cone and its prime contains t but is neither P_0 nor any P_C.
/// Throws std::invalid_argument if the preconditions fail.
SupportForm exceptional_witness_form(const Graph& g, const std::vector<Vertex>& cycle, Vertex v);

}  // namespace toricgraph
