#include "toricgraph/divisor.hpp"

#include "toricgraph/normality.hpp"

#include <algorithm>

namespace toricgraph {

std::vector<SupportForm> t_prime_forms(const std::vector<ClassifiedPrime>& primes) {
  std::vector<SupportForm> out;
  for (const auto& p : primes)
    if (p.prime.contains_t) out.push_back(p.prime.form);
  return out;
}

ClassGroupPresentation class_group(const std::vector<SupportForm>& t_forms) {
  if (t_forms.empty()) throw InvariantViolation("class_group: no primes containing t");
  ClassGroupPresentation cl;
  cl.r = t_forms.size();
  for (const auto& f : t_forms) {
    if (f.t_coeff() < 1)
      throw InvariantViolation("class_group: form " + to_string(f.coeffs()) + " is not positive at p_{}");
    cl.relation.push_back(f.t_coeff());
  }
  cl.relation_invariants = smith_normal_form(IntMatrix({cl.relation}, cl.r));
  if (cl.relation_invariants != std::vector<Integer>{1})
    throw InvariantViolation("class_group: relation " + to_string(cl.relation) + " is not primitive");
  cl.rank = cl.r - 1;
  return cl;
}

DivisorClass q_class(Vertex j, const std::vector<SupportForm>& t_forms) {
  DivisorClass c;
  for (const auto& f : t_forms) {
    if (j < 1 || static_cast<std::size_t>(j) >= f.dimension())
      throw std::out_of_range("q_class: vertex out of range");
    c.coeffs.push_back(-f.coeff(j));
  }
  return c;
}

DivisorClass canonical_class(const std::vector<SupportForm>& t_forms) {
  DivisorClass c;
  for (const auto& f : t_forms) {
    Integer k = 1;
    for (std::size_t j = 0; j + 1 < f.dimension(); ++j) k -= f.coeffs()[j];
    c.coeffs.push_back(k);
  }
  return c;
}

std::optional<Integer> multiple_of_relation(const DivisorClass& c, const ClassGroupPresentation& cl) {
  if (c.coeffs.size() != cl.r) throw std::invalid_argument("divisor class has the wrong length");
  // rho_i >= 1 everywhere, so the first entry fixes the multiplier.
  const Integer& rho0 = cl.relation.front();
  if (c.coeffs.front() % rho0 != 0) return std::nullopt;
  Integer a = c.coeffs.front() / rho0;
  for (std::size_t i = 0; i < cl.r; ++i)
    if (c.coeffs[i] != a * cl.relation[i]) return std::nullopt;
  return a;
}

bool equivalent(const DivisorClass& u, const DivisorClass& v, const ClassGroupPresentation& cl) {
  if (u.coeffs.size() != v.coeffs.size()) throw std::invalid_argument("divisor classes differ in length");
  DivisorClass d;
  for (std::size_t i = 0; i < u.coeffs.size(); ++i) d.coeffs.push_back(u.coeffs[i] - v.coeffs[i]);
  return multiple_of_relation(d, cl).has_value();
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("divisor classes differ in length");
  DivisorClass s;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) s.coeffs.push_back(a.coeffs[i] + b.coeffs[i]);
  return s;
}

GorensteinVerdict is_gorenstein(const Graph& g, const std::vector<ClassifiedPrime>& primes) {
  const auto forms = t_prime_forms(primes);
  const auto cl = class_group(forms);
  GorensteinVerdict v;
  v.a = multiple_of_relation(canonical_class(forms), cl);
  v.gorenstein = v.a.has_value();

  if (is_connected(g)) {
    const bool bip = bipartition(g).bipartite;
    if (bip) {
      v.bipartite_fast_path = is_unmixed(g).unmixed;
    } else {
      bool shape = true;
      for (const auto& p : primes)
        if (p.prime.contains_t && p.kind.tag != PrimeKind::Tag::Cover && p.kind.tag != PrimeKind::Tag::Zero)
          shape = false;
      if (shape) v.odd_cycle_fast_path = g.num_vertices() % 2 == 1 && is_unmixed(g).unmixed;
    }
  }
  for (const auto& fast : {v.bipartite_fast_path, v.odd_cycle_fast_path})
    if (fast && *fast != v.gorenstein) v.fast_paths_agree = false;
  if (!v.fast_paths_agree)
    throw InvariantViolation("is_gorenstein: structural fast path disagrees with the class-group test");
  return v;
}

GorensteinVerdict is_gorenstein(const Graph& g) {
  require_normal(g, "is_gorenstein");
  return is_gorenstein(g, height_one_primes(g));
}

}  // namespace toricgraph
