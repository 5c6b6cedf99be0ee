#include "toricgraph/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace toricgraph {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

struct Bezout {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace

IntVector make_vector(std::initializer_list<long long> values) {
  return IntVector(values.begin(), values.end());
}

IntVector make_vector(const std::vector<long long>& values) {
  return IntVector(values.begin(), values.end());
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw LatticeError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs_int(x));
  return g;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::vector<std::int64_t> to_int64(const IntVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
      throw LatticeError("coefficient does not fit in 64 bits");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, IntVector(cols, 0)), cols_(cols) {}

IntMatrix::IntMatrix(std::vector<IntVector> rows, std::size_t cols)
    : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw LatticeError("IntMatrix: ragged rows");
}

IntMatrix IntMatrix::from_rows(std::vector<IntVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix(std::move(rows), cols);
}

IntVector IntMatrix::apply(const IntVector& v) const {
  IntVector out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(dot(r, v));
  return out;
}

IntVector primitive_normalize(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw LatticeError("primitive_normalize: zero vector");
  IntVector out(v);
  for (auto& x : out) x /= g;
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  // Column-style Hermite reduction: m * U = [H | 0] with U unimodular; the
  // columns of U facing the zero block form a basis of the integer kernel.
  std::vector<IntVector> a(m.row_list());
  std::vector<IntVector> u(c, IntVector(c, 0));  // u[row][col]
  for (std::size_t i = 0; i < c; ++i) u[i][i] = 1;

  auto combine = [&](std::size_t p, std::size_t j, const Integer& s, const Integer& t,
                     const Integer& x, const Integer& y) {
    // col_p <- s*col_p + t*col_j ; col_j <- x*col_p + y*col_j
    auto step = [&](std::vector<IntVector>& mat) {
      for (auto& row : mat) {
        Integer cp = row[p], cj = row[j];
        row[p] = s * cp + t * cj;
        row[j] = x * cp + y * cj;
      }
    };
    step(a);
    step(u);
  };

  std::size_t pivot = 0;
  for (std::size_t i = 0; i < r && pivot < c; ++i) {
    for (std::size_t j = pivot + 1; j < c; ++j) {
      if (a[i][j] == 0) continue;
      const Integer ap = a[i][pivot], aj = a[i][j];
      auto [g, s, t] = extended_gcd(ap, aj);
      combine(pivot, j, s, t, Integer(-aj / g), Integer(ap / g));
    }
    if (a[i][pivot] != 0) ++pivot;
  }

  std::vector<IntVector> basis;
  for (std::size_t j = pivot; j < c; ++j) {
    IntVector v(c);
    for (std::size_t k = 0; k < c; ++k) v[k] = u[k][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const IntMatrix& m) { return m.cols() - kernel_basis(m).size(); }

std::vector<Integer> smith_normal_form(const IntMatrix& m) {
  std::vector<IntVector> a(m.row_list());
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> out;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || abs_int(a[i][j]) < abs_int(a[bi][bj]))) bi = i, bj = j;
      if (bi == rows) return out;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold the offending
      // row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs_int(a[t][t]));
  }
  return out;
}

}  // namespace toricgraph
