#pragma once

#include "toricgraph/cone.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace toricgraph {

/// Exponent vector of the monomial x^a t^b.
struct SemigroupMonomial {
  std::vector<std::int64_t> exps;
  std::int64_t t_deg = 0;

  IntVector as_vector() const;
  std::string str() const;
  auto operator<=>(const SemigroupMonomial&) const = default;
};

struct SemigroupMonomialHash {
  std::size_t operator()(const SemigroupMonomial& m) const noexcept;
};

/// Facet forms narrowed to machine integers.
struct FormTable {
  std::vector<std::vector<std::int64_t>> forms;  // each of length n + 1

  explicit FormTable(const std::vector<SupportForm>& facets);
  bool nonnegative(const SemigroupMonomial& m) const;
  bool strictly_positive(const SemigroupMonomial& m) const;
};

/// Lattice points (a, b) with t-coordinate `b` that every form keeps >= 0
/// (or > 0 when `strict`), in lexicographic order of `a`. The search uses the
/// bounds 0 <= a_i <= b and sum a_i <= 2b, which hold on the cone of R_G
/// because each generator has x-coordinates in {0, 1} summing to at most 2.
std::vector<SemigroupMonomial> slice_points(const FormTable& table, int n, int b, bool strict);

}  // namespace toricgraph
