#include "toricgraph/points.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <sstream>

namespace toricgraph {

IntVector SemigroupMonomial::as_vector() const {
  IntVector v(exps.begin(), exps.end());
  v.emplace_back(t_deg);
  return v;
}

std::string SemigroupMonomial::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exps.size(); ++i) os << (i ? "," : "") << exps[i];
  os << "; t^" << t_deg << ')';
  return os.str();
}

std::size_t SemigroupMonomialHash::operator()(const SemigroupMonomial& m) const noexcept {
  std::size_t seed = boost::hash_range(m.exps.begin(), m.exps.end());
  boost::hash_combine(seed, m.t_deg);
  return seed;
}

FormTable::FormTable(const std::vector<SupportForm>& facets) {
  forms.reserve(facets.size());
  for (const auto& f : facets) forms.push_back(to_int64(f.coeffs()));
}

namespace {

std::int64_t eval(const std::vector<std::int64_t>& f, const SemigroupMonomial& m) {
  std::int64_t s = f.back() * m.t_deg;
  for (std::size_t i = 0; i < m.exps.size(); ++i) s += f[i] * m.exps[i];
  return s;
}

}  // namespace

bool FormTable::nonnegative(const SemigroupMonomial& m) const {
  return std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return eval(f, m) >= 0; });
}

bool FormTable::strictly_positive(const SemigroupMonomial& m) const {
  return std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return eval(f, m) > 0; });
}

std::vector<SemigroupMonomial> slice_points(const FormTable& table, int n, int b, bool strict) {
  std::vector<SemigroupMonomial> out;
  if (b < 0) return out;
  const std::size_t nf = table.forms.size();
  // headroom[k][i]: the most coordinates i.. can still add to form k.
  std::vector<std::vector<std::int64_t>> headroom(nf, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t k = 0; k < nf; ++k)
    for (int i = n - 1; i >= 0; --i)
      headroom[k][i] = headroom[k][i + 1] + std::max<std::int64_t>(0, table.forms[k][i]) * b;

  std::vector<std::int64_t> partial(nf);
  for (std::size_t k = 0; k < nf; ++k) partial[k] = table.forms[k][n] * b;
  SemigroupMonomial cur{std::vector<std::int64_t>(n, 0), b};
  const std::int64_t need = strict ? 1 : 0;

  auto rec = [&](auto&& self, int i, std::int64_t budget) -> void {
    for (std::size_t k = 0; k < nf; ++k)
      if (partial[k] + headroom[k][i] < need) return;
    if (i == n) {
      out.push_back(cur);
      return;
    }
    const std::int64_t hi = std::min<std::int64_t>(b, budget);
    for (std::int64_t a = 0; a <= hi; ++a) {
      cur.exps[i] = a;
      for (std::size_t k = 0; k < nf; ++k) partial[k] += table.forms[k][i] * a;
      self(self, i + 1, budget - a);
      for (std::size_t k = 0; k < nf; ++k) partial[k] -= table.forms[k][i] * a;
    }
    cur.exps[i] = 0;
  };
  rec(rec, 0, 2 * static_cast<std::int64_t>(b));
  return out;
}

}  // namespace toricgraph
