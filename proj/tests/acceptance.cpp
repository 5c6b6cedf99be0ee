// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "corpus.hpp"

#include "toricgraph/canonical.hpp"
#include "toricgraph/divisor.hpp"
#include "toricgraph/normality.hpp"
#include "toricgraph/oracle.hpp"
#include "toricgraph/primes.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace toricgraph;

namespace {

// Collects the first few failures of a criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

std::vector<PrimeKind> expected_kinds(const Graph& g, bool with_zero) {
  std::vector<PrimeKind> out;
  for (const auto& c : minimal_vertex_covers(g)) out.push_back(PrimeKind::cover_prime(c));
  if (with_zero) out.push_back(PrimeKind::zero_prime());
  for (Vertex i = 1; i <= g.num_vertices(); ++i) out.push_back(PrimeKind::variable_prime(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeKind> observed_kinds(const std::vector<ClassifiedPrime>& ps) {
  auto k = kinds_of(ps);
  std::sort(k.begin(), k.end());
  return k;
}

const std::vector<corpus::Entry>& bipartite_corpus() {
  static const auto c = corpus::connected_bipartite(8);
  return c;
}

const std::vector<corpus::Entry>& full_corpus() {
  static const auto c = corpus::full();
  return c;
}

void cycle_census(Check& c) {
  for (int k = 3; k <= 11; ++k) {
    const bool expect = k == 3 || k == 4 || k == 5 || k == 7;
    c.expect(is_gorenstein(cycle_graph(k)).gorenstein == expect, "C_" + std::to_string(k));
  }
}

void bipartite_gorenstein(Check& c) {
  // sanity on the enumeration itself: unlabeled connected bipartite counts
  std::map<int, int> per_n;
  for (const auto& e : bipartite_corpus()) ++per_n[e.graph.num_vertices()];
  const std::map<int, int> known{{2, 1}, {3, 1}, {4, 3}, {5, 5}, {6, 17}, {7, 44}, {8, 182}};
  c.expect(per_n == known, "corpus counts per n differ from 1,1,3,5,17,44,182");
  for (const auto& e : bipartite_corpus()) {
    const auto ps = height_one_primes(e.graph);
    const auto cl = class_group(t_prime_forms(ps));
    // the verdict from the class group, compared against unmixedness
    const bool gor = multiple_of_relation(canonical_class(t_prime_forms(ps)), cl).has_value();
    c.expect(gor == is_unmixed(e.graph).unmixed, e.name);
  }
}

void bipartite_primes(Check& c) {
  for (const auto& e : bipartite_corpus())
    c.expect(observed_kinds(height_one_primes(e.graph)) == expected_kinds(e.graph, false), e.name);
}

void whiskered_odd_cycles(Check& c) {
  for (int k : {3, 5, 7})
    for (const auto& e : corpus::whiskered(k, 4)) {
      const auto& g = e.graph;
      const auto ps = height_one_primes(g);
      c.expect(observed_kinds(ps) == expected_kinds(g, true), e.name + " prime kinds");
      const bool gor = multiple_of_relation(canonical_class(t_prime_forms(ps)), class_group(t_prime_forms(ps)))
                           .has_value();
      const bool predicted = g.num_vertices() % 2 == 1 && is_unmixed(g).unmixed;
      c.expect(gor == predicted, e.name + " Gorenstein");
    }
}

SemigroupMonomial mono(std::vector<std::int64_t> a, std::int64_t b) { return {std::move(a), b}; }

void worked_example(Check& c) {
  const auto w111 = ToricCone::build(whiskered_cycle({1, 1, 1}));
  const auto gens = omega_generators(w111, 5).generators;
  c.expect(gens == std::vector<SemigroupMonomial>{mono({1, 1, 1, 1, 1, 1}, 4), mono({2, 2, 2, 1, 1, 1}, 5)},
           "C(1,1,1) omega generators");
  c.expect(!is_gorenstein(w111.graph).gorenstein, "C(1,1,1) not Gorenstein");
  c.expect(is_pseudo_gorenstein(w111).pseudo_gorenstein, "C(1,1,1) pseudo-Gorenstein");
  c.expect(!is_pseudo_gorenstein(ToricCone::build(whiskered_cycle({1, 1, 2}))).pseudo_gorenstein,
           "C(1,1,2) not pseudo-Gorenstein");
}

void odd_cycle_pseudo_gorenstein(Check& c) {
  for (int k : {3, 5, 7, 9}) {
    const int l = (k - 1) / 2;
    const auto cone = ToricCone::build(cycle_graph(k));
    for (int b = 0; b <= l; ++b)
      c.expect(omega_slice(cone, b).points.empty(), "C_" + std::to_string(k) + " slice " + std::to_string(b));
    c.expect(omega_slice(cone, l + 1).points ==
                 std::vector<SemigroupMonomial>{mono(std::vector<std::int64_t>(k, 1), l + 1)},
             "C_" + std::to_string(k) + " first slice");
    const auto pg = is_pseudo_gorenstein(cone);
    c.expect(pg.pseudo_gorenstein && pg.initial_degree == l + 1, "C_" + std::to_string(k) + " verdict");
  }
}

void exceptional_prime(Check& c) {
  const auto g = Graph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}});
  const auto ps = height_one_primes(g);
  c.expect(std::any_of(ps.begin(), ps.end(),
                       [](const auto& p) { return p.kind.tag == PrimeKind::Tag::Exceptional && p.prime.contains_t; }),
           "exceptional prime containing t");
  c.expect(!dominated_odd_cycle_condition(g), "dominated odd cycle condition fails");
  const SupportForm witness(make_vector({-1, -1, -1, 0, -2, 2}));
  const auto gens = semigroup_generators(g);
  c.expect(is_supporting(witness, gens), "witness is supporting");
  c.expect(exceptional_witness_form(g, {1, 2, 3}, 5) == witness, "witness construction");
  c.expect(zero_set_rank(witness, gens) == 5, "witness cuts out a facet");
}

// Normality from first principles: at most one non-bipartite component, and
// every two vertex-disjoint induced odd cycles in it joined by an edge.
bool normal_by_definition(const Graph& g) {
  const auto cycles = induced_odd_cycles(g);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      std::set<Vertex> a(cycles[i].begin(), cycles[i].end());
      bool touch = false;
      for (Vertex v : cycles[j])
        for (Vertex u : a) touch = touch || u == v || g.adjacent(u, v);
      if (!touch) return false;
    }
  return true;
}

void normality(Check& c) {
  for (const auto& e : full_corpus()) {
    // disconnected odd cycles never touch, so the pairwise test covers both clauses
    c.expect(is_normal(e.graph).normal == normal_by_definition(e.graph), e.name + " verdict");
  }
  const auto two = Graph::from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  c.expect(!is_normal(two).normal, "two triangles non-normal");
  const auto gap = normality_oracle(two, 6);
  c.expect(!gap.ok() && gap.gap.has_value(), "two triangles gap witness");
  for (const auto& e : full_corpus()) {
    const auto& g = e.graph;
    if (!(bipartition(g).bipartite || is_unicyclic(g))) continue;
    c.expect(normality_oracle(g, 5).ok(), e.name + " saturated to degree 5");
  }
}

void oracle_equivalence(Check& c) {
  for (const auto& e : full_corpus()) {
    const auto& g = e.graph;
    const int n = g.num_vertices();
    if (n <= 8) {
      const auto r = check_facets(g, ~std::uint64_t{0});
      c.expect(r.agreement && !r.skipped, e.name + " facets");
    }
    if (n <= 12) c.expect(check_minimal_covers(g).agreement, e.name + " covers");
    if (n <= 7 && is_normal(g).normal) c.expect(check_prime_closure(g, 3).agreement, e.name + " primality");
  }
}

void class_group_structure(Check& c) {
  for (const auto& e : full_corpus()) {
    const auto& g = e.graph;
    if (!is_normal(g).normal) continue;
    const auto forms = t_prime_forms(height_one_primes(g));
    const auto cl = class_group(forms);
    c.expect(content(cl.relation) == 1, e.name + " gcd");
    c.expect(cl.rank == cl.r - 1, e.name + " rank");
    DivisorClass sum{IntVector(cl.r, Integer(1))};
    for (Vertex j = 1; j <= g.num_vertices(); ++j) sum = sum + q_class(j, forms);
    c.expect(equivalent(canonical_class(forms), sum, cl), e.name + " canonical class");
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cycle census", 5, cycle_census},
      {2, "bipartite Gorenstein iff unmixed", 30, bipartite_gorenstein},
      {3, "bipartite prime set", 30, bipartite_primes},
      {4, "whiskered odd cycles", 30, whiskered_odd_cycles},
      {5, "worked example C(1,1,1) and C(1,1,2)", 10, worked_example},
      {6, "odd-cycle pseudo-Gorenstein", 20, odd_cycle_pseudo_gorenstein},
      {7, "exceptional prime", 5, exceptional_prime},
      {8, "normality", 30, normality},
      {9, "oracle equivalence", 60, oracle_equivalence},
      {10, "class-group structure", 30, class_group_structure},
  };

  // the corpus is shared, so build it outside the per-criterion clocks
  const auto corpus_start = std::chrono::steady_clock::now();
  const std::size_t corpus_size = full_corpus().size();
  const std::size_t bipartite_size = bipartite_corpus().size();
  const double corpus_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - corpus_start).count();
  std::printf("corpus: %zu graphs (%zu connected bipartite, n <= 8) built in %.2f s\n", corpus_size, bipartite_size,
              corpus_secs);

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= cr.budget_seconds;
    const bool pass = check.ok() && error.empty() && in_time;
    failed += !pass;
    std::printf("[%s] %2d %-40s %6zu cases %8.2f s (budget %.0f s)\n", pass ? "PASS" : "FAIL", cr.id, cr.name,
                check.cases, secs, cr.budget_seconds);
    for (const auto& f : check.failures) std::printf("       failed: %s\n", f.c_str());
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
    if (!in_time) std::printf("       over the time budget\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
