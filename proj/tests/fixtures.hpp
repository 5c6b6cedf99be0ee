#pragma once

#include "toricgraph/graph.hpp"
#include "toricgraph/lattice.hpp"

#include <algorithm>
#include <vector>

namespace fixtures {

using namespace toricgraph;

inline Graph single_edge() { return Graph::from_edges(2, {{1, 2}}); }
inline Graph triangle() { return cycle_graph(3); }

// 1-2-3 triangle with the pendant path 3-4-5
inline Graph triangle_with_tail() { return Graph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}}); }

inline Graph two_triangles() {
  return Graph::from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
}

// triangles 123 and 456 joined through vertex 7
inline Graph bridged_triangles() {
  return Graph::from_edges(7, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 7}, {7, 4}});
}

inline IntVector iv(std::initializer_list<long long> xs) { return make_vector(xs); }

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace fixtures
