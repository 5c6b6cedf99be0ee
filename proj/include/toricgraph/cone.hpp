#pragma once

#include "toricgraph/graph.hpp"
#include "toricgraph/lattice.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricgraph {

class ConeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A face of the one-dimensional complex of a graph: the empty face, a
/// vertex, or an edge {u, v} with u < v.
struct FaceLabel {
  enum class Kind { Empty, Vertex, Edge };
  Kind kind = Kind::Empty;
  Vertex u = 0, v = 0;

  static FaceLabel empty() { return {}; }
  static FaceLabel vertex(Vertex i) { return {Kind::Vertex, i, 0}; }
  static FaceLabel edge(Vertex i, Vertex j) { return {Kind::Edge, std::min(i, j), std::max(i, j)}; }

  bool contains(Vertex i) const {
    return (kind == Kind::Vertex && u == i) || (kind == Kind::Edge && (u == i || v == i));
  }
  std::size_t size() const { return kind == Kind::Empty ? 0 : kind == Kind::Vertex ? 1 : 2; }
  std::string str() const;

  auto operator<=>(const FaceLabel&) const = default;
};

/// The lattice point p_F = sum_{i in F} e_i + e_{n+1} of a face.
struct Generator {
  FaceLabel face;
  IntVector point;
};

/// A primitive integer linear form (c_1, ..., c_n, c_{n+1}), the last
/// coordinate pairing with the t-exponent.
class SupportForm {
 public:
  SupportForm() = default;
  /// Normalizes to primitive. Throws LatticeError on the zero vector.
  explicit SupportForm(IntVector coeffs);

  const IntVector& coeffs() const noexcept { return coeffs_; }
  std::size_t dimension() const noexcept { return coeffs_.size(); }
  /// Coefficient of x_i, 1-based; t_coeff() is the last one.
  const Integer& coeff(Vertex i) const { return coeffs_.at(i - 1); }
  const Integer& t_coeff() const { return coeffs_.back(); }
  Integer operator()(const IntVector& p) const { return dot(coeffs_, p); }

  auto operator<=>(const SupportForm& o) const { return coeffs_ <=> o.coeffs_; }
  bool operator==(const SupportForm& o) const = default;

 private:
  IntVector coeffs_;
};

/// Generators in the fixed order: empty face, vertices ascending, edges
/// lexicographically.
std::vector<Generator> semigroup_generators(const Graph& g);

std::vector<IntVector> points_of(const std::vector<Generator>& gens);

/// Facets of the cone spanned by `points` via the double description method,
/// inserting points in the given order. The points must span a
/// full-dimensional pointed cone; ConeError otherwise. Result is deduplicated
/// and sorted.
std::vector<SupportForm> facet_support_forms(const std::vector<IntVector>& points);
std::vector<SupportForm> facet_support_forms(const std::vector<Generator>& gens);

/// Faces F with f(p_F) = 0. Throws ConeError if f is negative on a generator.
std::vector<FaceLabel> face_of_form(const SupportForm& f, const std::vector<Generator>& gens);

/// f(p_F) >= 0 for every generator.
bool is_supporting(const SupportForm& f, const std::vector<Generator>& gens);

/// Lattice rank of the generator points on which f vanishes.
std::size_t zero_set_rank(const SupportForm& f, const std::vector<Generator>& gens);

/// The cone data of R_G bundled for reuse by the downstream modules.
struct ToricCone {
  Graph graph;
  std::vector<Generator> generators;
  std::vector<SupportForm> facets;

  static ToricCone build(const Graph& g);
  int n() const { return graph.num_vertices(); }
};

}  // namespace toricgraph
