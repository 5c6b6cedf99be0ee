#pragma once

#include "toricgraph/graph.hpp"

#include <string>
#include <vector>

namespace corpus {

struct Entry {
  std::string name;
  toricgraph::Graph graph;
};

/// Connected bipartite graphs on 2..n_max vertices, one per isomorphism class.
std::vector<Entry> connected_bipartite(int n_max);

/// Connected graphs on 2..n_max vertices, one per isomorphism class.
std::vector<Entry> connected_graphs(int n_max);

/// C(a) for every whisker sequence of length k with sum <= max_total, up to symmetry.
std::vector<Entry> whiskered(int k, int max_total);

std::vector<Entry> cycles(int k_min, int k_max);

/// Hand-picked graphs: the non-normal examples and a few exceptional-prime cases.
std::vector<Entry> named();

/// Everything above with the bounds used by the acceptance suite, deduplicated
/// by isomorphism class.
std::vector<Entry> full();

}  // namespace corpus
