#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toricgraph {

/// Vertex labels are 1-based throughout, matching the vertex set [n].
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Thrown for malformed graph input. `line()` is 0 when the problem is not
/// tied to a particular input line.
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Finite simple graph on [n] with no isolated vertices.
///
/// Edges are stored with u < v and sorted lexicographically; the adjacency
/// lists are sorted ascending.
class Graph {
 public:
  /// Validates and builds the graph. Throws GraphError on loops, duplicate
  /// edges, labels outside [1, n] and isolated vertices.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;  // index 0 unused
  std::vector<std::vector<char>> matrix_;
};

/// Parses the edge-list text format: an optional leading `n <count>` line,
/// then one `u v` pair per line. `#` starts a comment.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph; always writes the `n` header.
std::string format_graph(const Graph& g);

/// Components as sorted vertex lists, ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  /// Color classes when bipartite; within a component the class holding the
  /// component's smallest vertex is side 0.
  VertexSet side0, side1;
  /// Otherwise an odd cycle, closed: front() == back().
  std::vector<Vertex> odd_walk;
};

Bipartition bipartition(const Graph& g);

using VertexCover = VertexSet;

bool is_vertex_cover(const Graph& g, const VertexSet& c);
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& c);

/// Inclusion-minimal vertex covers, each sorted, list in lexicographic order.
/// Computed as complements of maximal independent sets (Bron–Kerbosch with
/// pivoting on the complement graph). Requires n <= 64.
std::vector<VertexCover> minimal_vertex_covers(const Graph& g);

struct Unmixedness {
  bool unmixed = false;
  std::vector<std::size_t> cover_sizes;  // sorted multiset
};

Unmixedness is_unmixed(const Graph& g);

/// Chordless cycles of odd length, each rotated so the smallest vertex comes
/// first followed by its smaller cycle neighbour. Exponential in the worst
/// case; meant for graphs with a couple of dozen vertices at most.
std::vector<std::vector<Vertex>> induced_odd_cycles(const Graph& g);

/// All chordless cycles (any length >= 3), same canonical form.
std::vector<std::vector<Vertex>> induced_cycles(const Graph& g);

/// Every two induced odd cycles share a vertex or are joined by an edge.
bool odd_cycle_condition(const Graph& g);

bool is_unicyclic(const Graph& g);

struct WhiskeredShape {
  int k = 0;
  std::vector<int> a;
  /// vertex_map[x] is the graph vertex carrying abstract label x, where the
  /// abstract labels are: cycle vertices 1..k, then the whiskers of cycle
  /// vertex 1, those of vertex 2, and so on.
  std::vector<Vertex> vertex_map;

  int num_vertices() const;
};

/// Recognises C(a_1..a_k) structurally. The returned sequence is the
/// lexicographically least among its rotations and reflections.
std::optional<WhiskeredShape> recognize_whiskered_cycle(const Graph& g);

/// Non-bipartite, and every vertex off an induced odd cycle has a neighbour
/// on it.
bool dominated_odd_cycle_condition(const Graph& g);

// Named families, labelled as in the whiskered-cycle construction.
Graph cycle_graph(int k);
Graph path_graph(int k);
Graph complete_bipartite_graph(int m, int n);
Graph whiskered_cycle(const std::vector<int>& a);

}  // namespace toricgraph
