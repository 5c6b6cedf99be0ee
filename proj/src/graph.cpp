#include "toricgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <deque>
#include <functional>
#include <sstream>

namespace toricgraph {

GraphError::GraphError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n <= 0) throw GraphError("vertex count must be positive");
  for (auto& [u, v] : edges) {
    if (u <= 0 || v <= 0) throw GraphError("non-positive vertex label");
    if (u > n || v > n) throw GraphError("vertex label exceeds vertex count " + std::to_string(n));
    if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw GraphError("duplicate edge " + std::to_string(dup->first) + " " +
                     std::to_string(dup->second));

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n + 1, {});
  g.matrix_.assign(n + 1, std::vector<char>(n + 1, 0));
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.matrix_[u][v] = g.matrix_[v][u] = 1;
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (g.adj_[v].empty()) throw GraphError("isolated vertex " + std::to_string(v));
    std::sort(g.adj_[v].begin(), g.adj_[v].end());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  return matrix_[u][v] != 0;
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<long long> declared;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  long long max_label = 0;
  bool seen_content = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      long long count = 0;
      if (seen_content) throw GraphError("header must precede all edges", line_no);
      if (toks.size() != 2 || !parse_int(toks[1], count))
        throw GraphError("malformed header, expected 'n <count>'", line_no);
      if (count <= 0) throw GraphError("vertex count must be positive", line_no);
      declared = count;
      header_line = line_no;
      seen_content = true;
      continue;
    }
    seen_content = true;
    long long u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw GraphError("malformed line, expected 'u v'", line_no);
    if (u <= 0 || v <= 0) throw GraphError("non-positive vertex label", line_no);
    if (u == v) throw GraphError("loop edge", line_no);
    if (declared && (u > *declared || v > *declared))
      throw GraphError("vertex label exceeds declared count " + std::to_string(*declared), line_no);
    if (std::max(u, v) > (1LL << 20)) throw GraphError("vertex label too large", line_no);
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == e)
        throw GraphError("duplicate edge (first seen at line " + std::to_string(edge_line[i]) + ")",
                         line_no);
    edges.push_back(e);
    edge_line.push_back(line_no);
    max_label = std::max({max_label, u, v});
  }
  if (edges.empty()) throw GraphError("no edges", header_line);
  const int n = static_cast<int>(declared.value_or(max_label));
  std::vector<char> touched(n + 1, 0);
  for (auto [u, v] : edges) touched[u] = touched[v] = 1;
  for (Vertex v = 1; v <= n; ++v)
    if (!touched[v]) throw GraphError("isolated vertex " + std::to_string(v), header_line);
  return Graph::from_edges(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexSet> out;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

Bipartition bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n + 1, -1), parent(n + 1, 0), depth(n + 1, 0);
  Bipartition result;
  for (Vertex s = 1; s <= n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Climb both tree paths to their meeting point; the two branches
          // plus the edge {u, w} form an odd cycle.
          std::vector<Vertex> up_u{u}, up_w{w};
          Vertex a = u, b = w;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_w.push_back(b = parent[b]);
          }
          up_w.pop_back();  // meeting vertex already at the end of up_u
          std::vector<Vertex> walk(up_u.rbegin(), up_u.rend());
          walk.insert(walk.end(), up_w.begin(), up_w.end());
          walk.push_back(walk.front());
          result.odd_walk = std::move(walk);
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  for (Vertex v = 1; v <= n; ++v) (color[v] == 0 ? result.side0 : result.side1).push_back(v);
  return result;
}

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
  std::vector<char> in(g.num_vertices() + 1, 0);
  for (Vertex v : c) {
    if (v < 1 || v > g.num_vertices()) return false;
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& c) {
  if (!is_vertex_cover(g, c)) return false;
  // c is minimal iff every member has a neighbour outside c.
  std::vector<char> in(g.num_vertices() + 1, 0);
  for (Vertex v : c) in[v] = 1;
  for (Vertex v : c) {
    const auto& nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) return false;
  }
  return true;
}

std::vector<VertexCover> minimal_vertex_covers(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 64) throw std::invalid_argument("minimal_vertex_covers: at most 64 vertices supported");
  using Mask = std::uint64_t;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> indep_nb(n, 0);  // neighbours in the complement graph
  for (int v = 0; v < n; ++v) {
    Mask adj = 0;
    for (Vertex w : g.neighbors(v + 1)) adj |= Mask{1} << (w - 1);
    indep_nb[v] = all & ~adj & ~(Mask{1} << v);
  }

  std::vector<VertexCover> covers;
  std::function<void(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
    if (!p && !x) {
      VertexCover c;
      for (int v = 0; v < n; ++v)
        if (!(r >> v & 1)) c.push_back(v + 1);
      covers.push_back(std::move(c));
      return;
    }
    int pivot = -1, best = -1;
    for (Mask px = p | x; px; px &= px - 1) {
      int u = std::countr_zero(px);
      int score = std::popcount(p & indep_nb[u]);
      if (score > best) best = score, pivot = u;
    }
    for (Mask cand = p & ~indep_nb[pivot]; cand; cand &= cand - 1) {
      int v = std::countr_zero(cand);
      Mask bit = Mask{1} << v;
      expand(r | bit, p & indep_nb[v], x & indep_nb[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  expand(0, all, 0);
  std::sort(covers.begin(), covers.end());
  return covers;
}

Unmixedness is_unmixed(const Graph& g) {
  Unmixedness u;
  for (const auto& c : minimal_vertex_covers(g)) u.cover_sizes.push_back(c.size());
  std::sort(u.cover_sizes.begin(), u.cover_sizes.end());
  u.unmixed = u.cover_sizes.front() == u.cover_sizes.back();
  return u;
}

std::vector<std::vector<Vertex>> induced_cycles(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> on_path(n + 1, 0);

  // Grows chordless paths whose vertices all exceed path[0]; a path closes
  // into a chordless cycle when its new end is adjacent to path[0].
  std::function<void()> grow = [&]() {
    const Vertex start = path.front();
    for (Vertex w : g.neighbors(path.back())) {
      if (w <= start || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(w, path[i]);
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(w, start)) {
        if (path[1] < w) {
          auto cycle = path;
          cycle.push_back(w);
          out.push_back(std::move(cycle));
        }
        continue;
      }
      path.push_back(w);
      on_path[w] = 1;
      grow();
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    path = {s};
    on_path[s] = 1;
    grow();
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> induced_odd_cycles(const Graph& g) {
  auto all = induced_cycles(g);
  std::erase_if(all, [](const auto& c) { return c.size() % 2 == 0; });
  return all;
}

namespace {

bool touching(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex u : a)
    for (Vertex v : b)
      if (u == v || g.adjacent(u, v)) return true;
  return false;
}

}  // namespace

bool odd_cycle_condition(const Graph& g) {
  const auto cycles = induced_odd_cycles(g);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if (!touching(g, cycles[i], cycles[j])) return false;
  return true;
}

bool is_unicyclic(const Graph& g) {
  return is_connected(g) && g.num_edges() == static_cast<std::size_t>(g.num_vertices());
}

int WhiskeredShape::num_vertices() const {
  int n = k;
  for (int x : a) n += x;
  return n;
}

std::optional<WhiskeredShape> recognize_whiskered_cycle(const Graph& g) {
  if (!is_unicyclic(g)) return std::nullopt;
  const int n = g.num_vertices();

  // Strip leaves down to the 2-core, which for a unicyclic graph is its cycle.
  std::vector<int> deg(n + 1);
  std::vector<char> removed(n + 1, 0);
  std::deque<Vertex> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if ((deg[v] = static_cast<int>(g.neighbors(v).size())) == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    Vertex v = leaves.front();
    leaves.pop_front();
    removed[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
  }

  // Every vertex off the cycle must be a whisker: a leaf hanging on the cycle.
  for (Vertex v = 1; v <= n; ++v) {
    if (!removed[v]) continue;
    if (g.neighbors(v).size() != 1 || removed[g.neighbors(v).front()]) return std::nullopt;
  }

  std::vector<Vertex> cycle;
  Vertex first = 1;
  while (removed[first]) ++first;
  Vertex prev = 0, cur = first;
  do {
    cycle.push_back(cur);
    Vertex next = 0;
    for (Vertex w : g.neighbors(cur))
      if (!removed[w] && w != prev && (next == 0 || w < next)) next = w;
    prev = cur;
    cur = next;
  } while (cur != first);

  const int k = static_cast<int>(cycle.size());
  auto whiskers_of = [&](Vertex c) {
    VertexSet ws;
    for (Vertex w : g.neighbors(c))
      if (removed[w]) ws.push_back(w);
    return ws;
  };

  std::vector<Vertex> best_order;
  std::vector<int> best_a;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int r = 0; r < k; ++r) {
      std::vector<Vertex> order(k);
      for (int i = 0; i < k; ++i)
        order[i] = reflect ? cycle[((r - i) % k + k) % k] : cycle[(r + i) % k];
      std::vector<int> a(k);
      for (int i = 0; i < k; ++i) a[i] = static_cast<int>(whiskers_of(order[i]).size());
      if (best_a.empty() || a < best_a) {
        best_a = std::move(a);
        best_order = std::move(order);
      }
    }
  }

  WhiskeredShape shape;
  shape.k = k;
  shape.a = best_a;
  shape.vertex_map.assign(n + 1, 0);
  int next_label = k + 1;
  for (int i = 0; i < k; ++i) shape.vertex_map[i + 1] = best_order[i];
  for (int i = 0; i < k; ++i)
    for (Vertex w : whiskers_of(best_order[i])) shape.vertex_map[next_label++] = w;
  return shape;
}

bool dominated_odd_cycle_condition(const Graph& g) {
  const auto cycles = induced_odd_cycles(g);
  if (cycles.empty()) return false;
  const int n = g.num_vertices();
  for (const auto& cyc : cycles) {
    std::vector<char> on(n + 1, 0);
    for (Vertex v : cyc) on[v] = 1;
    for (Vertex v = 1; v <= n; ++v) {
      if (on[v]) continue;
      const auto& nb = g.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return on[w] != 0; })) return false;
    }
  }
  return true;
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  return whiskered_cycle(std::vector<int>(k, 0));
}

Graph path_graph(int k) {
  if (k < 2) throw std::invalid_argument("path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(k, std::move(edges));
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite sides must be positive");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) edges.emplace_back(i, m + j);
  return Graph::from_edges(m + n, std::move(edges));
}

Graph whiskered_cycle(const std::vector<int>& a) {
  const int k = static_cast<int>(a.size());
  if (k < 3) throw std::invalid_argument("whiskered cycle needs at least 3 cycle vertices");
  if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("whisker counts must be non-negative");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(i, i % k + 1);
  int next = k + 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < a[i - 1]; ++j) edges.emplace_back(i, next++);
  return Graph::from_edges(next - 1, std::move(edges));
}

}  // namespace toricgraph
