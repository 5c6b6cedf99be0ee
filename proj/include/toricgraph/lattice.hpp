#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricgraph {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IntVector make_vector(std::initializer_list<long long> values);
IntVector make_vector(const std::vector<long long>& values);
std::string to_string(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Integer content(const IntVector& v);  // gcd of the entries, 0 for the zero vector
bool is_zero(const IntVector& v);

/// Narrowing to machine integers for the enumeration hot loops; throws
/// LatticeError if an entry does not fit.
std::vector<std::int64_t> to_int64(const IntVector& v);

/// Dense rectangular integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// All rows must share the width `cols`.
  IntMatrix(std::vector<IntVector> rows, std::size_t cols);
  static IntMatrix from_rows(std::vector<IntVector> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const IntVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<IntVector>& row_list() const noexcept { return rows_; }

  IntVector apply(const IntVector& v) const;

 private:
  std::vector<IntVector> rows_;
  std::size_t cols_ = 0;
};

/// Divides by the content and keeps the sign (the result is v times a
/// positive rational). Throws LatticeError on the zero vector.
IntVector primitive_normalize(const IntVector& v);

/// A basis of the integer kernel {v in Z^cols : m v = 0}. The basis spans the
/// full (saturated) kernel lattice, not just a finite-index sublattice.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Positive elementary divisors d_1 | d_2 | ... ; zero matrix gives {}.
std::vector<Integer> smith_normal_form(const IntMatrix& m);

}  // namespace toricgraph
