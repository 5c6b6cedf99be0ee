#include "corpus.hpp"

#include "toricgraph/report.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace corpus {
namespace tg = toricgraph;
namespace {

std::string edge_name(const tg::Graph& g) {
  std::string s = "n=" + std::to_string(g.num_vertices()) + ":";
  for (auto [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

// Canonical code of a graph on n <= 8 vertices: the least upper-triangle
// adjacency bitstring over all vertex permutations.
std::uint64_t canonical_code(int n, const std::vector<std::vector<char>>& adj) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | static_cast<std::uint64_t>(adj[perm[i]][perm[j]]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected_no_isolated(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

tg::Graph to_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<tg::Edge> es;
  for (auto [u, v] : edges) es.emplace_back(u + 1, v + 1);
  return tg::Graph::from_edges(n, es);
}

std::uint64_t code_of(const tg::Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u - 1][v - 1] = adj[v - 1][u - 1] = 1;
  return canonical_code(n, adj);
}

// Bipartite classes: a connected bipartite graph has a unique bipartition, so
// canonicalising the p x q biadjacency matrix under row and column
// permutations (and transposition when p == q) separates the classes.
std::vector<std::uint32_t> biadjacency_code(int p, int q, std::uint32_t mask, bool transpose) {
  std::vector<int> cols(transpose ? p : q);
  std::iota(cols.begin(), cols.end(), 0);
  const int rows = transpose ? q : p;
  auto bit = [&](int r, int c) { return transpose ? (mask >> (c * q + r)) & 1u : (mask >> (r * q + c)) & 1u; };
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> rs(rows);
    for (int r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) rs[r] = (rs[r] << 1) | bit(r, cols[c]);
    std::sort(rs.begin(), rs.end());
    if (best.empty() || rs < best) best = rs;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return best;
}

}  // namespace

std::vector<Entry> connected_bipartite(int n_max) {
  std::vector<Entry> out;
  for (int n = 2; n <= n_max; ++n)
    for (int p = 1; 2 * p <= n; ++p) {
      const int q = n - p;
      std::set<std::vector<std::uint32_t>> seen;
      for (std::uint32_t mask = 1; mask < (1u << (p * q)); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int r = 0; r < p; ++r)
          for (int c = 0; c < q; ++c)
            if ((mask >> (r * q + c)) & 1u) edges.emplace_back(r, p + c);
        if (!connected_no_isolated(n, edges)) continue;
        auto code = biadjacency_code(p, q, mask, false);
        if (p == q) code = std::min(code, biadjacency_code(p, q, mask, true));
        if (!seen.insert(code).second) continue;
        auto g = to_graph(n, edges);
        out.push_back({"bipartite " + edge_name(g), std::move(g)});
      }
    }
  return out;
}

std::vector<Entry> connected_graphs(int n_max) {
  std::vector<Entry> out;
  for (int n = 2; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1u) {
          edges.push_back(slots[s]);
          adj[slots[s].first][slots[s].second] = adj[slots[s].second][slots[s].first] = 1;
        }
      if (!connected_no_isolated(n, edges)) continue;
      if (!seen.insert(canonical_code(n, adj)).second) continue;
      auto g = to_graph(n, edges);
      out.push_back({"connected " + edge_name(g), std::move(g)});
    }
  }
  return out;
}

std::vector<Entry> whiskered(int k, int max_total) {
  std::vector<Entry> out;
  for (const auto& a : tg::whisker_sequences(k, max_total))
    out.push_back({tg::family_instance_name("whiskered", a), tg::whiskered_cycle(a)});
  return out;
}

std::vector<Entry> cycles(int k_min, int k_max) {
  std::vector<Entry> out;
  for (int k = k_min; k <= k_max; ++k) out.push_back({"cycle " + std::to_string(k), tg::cycle_graph(k)});
  return out;
}

std::vector<Entry> named() {
  using tg::Graph;
  return {
      {"triangle with tail", Graph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}})},
      {"two disjoint triangles", Graph::from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})},
      {"triangles bridged by a path",
       Graph::from_edges(7, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 7}, {7, 4}})},
      {"triangle and disjoint pentagon",
       Graph::from_edges(8, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {4, 8}})},
      {"triangle and disjoint edge", Graph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {4, 5}})},
      {"triangle and disjoint square",
       Graph::from_edges(7, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}})},
      {"triangle with long tail", Graph::from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}})},
      {"pentagon with tail", Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {5, 6}, {6, 7}})},
      {"bowtie", Graph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}})},
      {"two edges", Graph::from_edges(4, {{1, 2}, {3, 4}})},
  };
}

std::vector<Entry> full() {
  std::vector<Entry> all;
  auto append = [&](std::vector<Entry> xs) {
    for (auto& x : xs) all.push_back(std::move(x));
  };
  append(named());
  append(cycles(3, 11));
  for (int k : {3, 5, 7}) append(whiskered(k, 4));
  append(connected_bipartite(8));
  append(connected_graphs(6));

  std::vector<Entry> out;
  std::set<std::pair<int, std::uint64_t>> seen;
  for (auto& e : all) {
    const int n = e.graph.num_vertices();
    // isomorphism dedup only where the permutation scan is cheap
    if (n <= 8 && !seen.insert({n, code_of(e.graph)}).second) continue;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace corpus
