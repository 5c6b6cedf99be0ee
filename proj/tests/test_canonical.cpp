#include "fixtures.hpp"

#include "toricgraph/canonical.hpp"
#include "toricgraph/normality.hpp"

#include <doctest.h>

using namespace toricgraph;
using namespace fixtures;

namespace {

SemigroupMonomial mono(std::vector<std::int64_t> a, std::int64_t b) { return {std::move(a), b}; }

}  // namespace

TEST_CASE("semigroup membership") {
  const auto c3 = ToricCone::build(triangle());
  CHECK(semigroup_membership(c3, mono({1, 1, 1}, 2)));
  CHECK_FALSE(semigroup_membership(c3, mono({1, 1, 1}, 1)));
  CHECK_FALSE(semigroup_membership(ToricCone::build(single_edge()), mono({2, 0}, 1)));
  CHECK_THROWS_AS(semigroup_membership(c3, mono({1, 1}, 1)), std::invalid_argument);
}

TEST_CASE("omega slices") {
  const auto c3 = ToricCone::build(triangle());
  CHECK(omega_slice(c3, 2).points == std::vector<SemigroupMonomial>{mono({1, 1, 1}, 2)});
  CHECK(omega_slice(c3, 0).points.empty());
  CHECK(omega_slice(ToricCone::build(cycle_graph(5)), 3).points ==
        std::vector<SemigroupMonomial>{mono({1, 1, 1, 1, 1}, 3)});
  // (1,1,1,1,1) at degree 3 plus the five points with one exponent 2 and f_0 = 0
  CHECK(variable_prime_intersection_slice(ToricCone::build(cycle_graph(5)), 3).size() == 6);
}

TEST_CASE("omega Hilbert function") {
  // frozen from the LP interior-point script
  CHECK(omega_hilbert(ToricCone::build(triangle()), 3) == std::vector<std::size_t>{0, 0, 1, 7});
  CHECK(omega_hilbert(ToricCone::build(cycle_graph(5)), 4) == std::vector<std::size_t>{0, 0, 0, 1, 11});
  CHECK(omega_hilbert(ToricCone::build(whiskered_cycle({1, 1, 1})), 5) ==
        std::vector<std::size_t>{0, 0, 0, 0, 1, 14});
  CHECK(omega_hilbert(ToricCone::build(cycle_graph(4)), 4) == std::vector<std::size_t>{0, 0, 0, 1, 9});
}

TEST_CASE("pseudo-Gorenstein") {
  const auto c7 = is_pseudo_gorenstein(ToricCone::build(cycle_graph(7)));
  CHECK(c7.pseudo_gorenstein);
  CHECK(c7.initial_degree == 4);
  CHECK(c7.slice_count == 1);
  CHECK(is_pseudo_gorenstein(ToricCone::build(cycle_graph(9))).pseudo_gorenstein);
  CHECK(is_pseudo_gorenstein(ToricCone::build(whiskered_cycle({1, 1, 1}))).pseudo_gorenstein);
  const auto w = is_pseudo_gorenstein(ToricCone::build(whiskered_cycle({1, 1, 2})));
  CHECK_FALSE(w.pseudo_gorenstein);
  CHECK(w.initial_degree == 5);
  CHECK(w.slice_count == 2);
  CHECK_THROWS_AS(is_pseudo_gorenstein(ToricCone::build(triangle()), 1), CanonicalModuleError);
}

TEST_CASE("omega generators") {
  const auto w = omega_generators(ToricCone::build(whiskered_cycle({1, 1, 1})), 5);
  CHECK(w.generators == std::vector<SemigroupMonomial>{mono({1, 1, 1, 1, 1, 1}, 4), mono({2, 2, 2, 1, 1, 1}, 5)});
  CHECK(w.truncated);
  CHECK(omega_generators(ToricCone::build(whiskered_cycle({1, 1, 1})), 4).generators.size() == 1);
  CHECK(omega_generators(ToricCone::build(triangle()), 2).generators ==
        std::vector<SemigroupMonomial>{mono({1, 1, 1}, 2)});
  const auto c5 = omega_generators(ToricCone::build(cycle_graph(5)), 6);
  CHECK(c5.generators == std::vector<SemigroupMonomial>{mono({1, 1, 1, 1, 1}, 3)});
  CHECK_FALSE(c5.truncated);
}

TEST_CASE("canonical module needs normality") {
  CHECK_THROWS_AS(omega_slice(ToricCone::build(two_triangles()), 3), NotNormalError);
}
