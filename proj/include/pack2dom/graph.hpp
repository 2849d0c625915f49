#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pack2dom {

using Vertex = int;
using VertexMask = std::uint64_t;

// Largest order for which the bitset-backed solvers are available.
inline constexpr int kMaxMaskOrder = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge make(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted. For n <= 64 each vertex also carries a
/// bitset row, which is what the exact solvers work on.
class Graph {
 public:
  Graph() = default;

  /// Builds from a list of pairs. Duplicate pairs are collapsed; the number
  /// collapsed is written to `duplicates` when non-null.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::size_t* duplicates = nullptr) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& raw : edges) {
      if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n) {
        throw GraphError("vertex out of range in edge " + to_string(raw));
      }
      if (raw.u == raw.v) {
        throw GraphError("self-loop at vertex " + std::to_string(raw.u));
      }
      g.adj_[raw.u].push_back(raw.v);
      g.adj_[raw.v].push_back(raw.u);
    }
    std::size_t total = 0;
    for (auto& nbrs : g.adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      total += nbrs.size();
    }
    g.m_ = static_cast<int>(total / 2);
    if (duplicates) *duplicates = edges.size() - static_cast<std::size_t>(g.m_);
    g.build_rows();
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) edges.push_back(Edge{a, b});
    return from_edges(n, edges);
  }

  int order() const { return n_; }
  int size() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }

  bool adjacent(Vertex a, Vertex b) const {
    check(a);
    check(b);
    if (!rows_.empty()) return (rows_[a] >> b) & 1u;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  bool has_edge(const Edge& e) const {
    return e.u >= 0 && e.v < n_ && e.u != e.v && adjacent(e.u, e.v);
  }

  /// Sorted edge list.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back(Edge{u, v});
      }
    }
    return out;
  }

  bool has_masks() const { return n_ <= kMaxMaskOrder; }

  /// Open neighborhood as a bitset; requires n <= 64.
  VertexMask row(Vertex v) const {
    require_masks();
    return rows_[check(v)];
  }

  VertexMask closed_row(Vertex v) const { return row(v) | (VertexMask{1} << v); }

  VertexMask all_vertices() const {
    require_masks();
    return n_ == 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1);
  }

  void require_masks() const {
    if (!has_masks()) {
      throw BoundExceeded("graph on " + std::to_string(n_) +
                          " vertices exceeds the 64-vertex bitset limit");
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Vertex check(Vertex v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
    return v;
  }

  void build_rows() {
    rows_.clear();
    if (n_ > kMaxMaskOrder) return;
    rows_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) rows_[u] |= VertexMask{1} << v;
    }
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexMask> rows_;
};

struct EdgeListGraph {
  Graph graph;
  std::size_t duplicates = 0;
};

/// Validating constructor that also reports how many duplicate pairs were
/// collapsed.
inline EdgeListGraph from_edge_list(int n, std::span<const Edge> edges) {
  EdgeListGraph out;
  out.graph = Graph::from_edges(n, edges, &out.duplicates);
  return out;
}

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

struct DegreeProfile {
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> degrees;
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

/// perm[v] is the new label of vertex v.
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw GraphError("permutation length does not match graph order");
  }
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw GraphError("not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::make(perm[e.u], perm[e.v]));
  return Graph::from_edges(g.order(), edges);
}

inline Graph add_edge(const Graph& g, Edge e) {
  auto edges = g.edges();
  edges.push_back(Edge::make(e.u, e.v));
  return Graph::from_edges(g.order(), edges);
}

inline Graph remove_edge(const Graph& g, Edge e) {
  e = Edge::make(e.u, e.v);
  auto edges = g.edges();
  std::erase(edges, e);
  return Graph::from_edges(g.order(), edges);
}

// Small named graphs used throughout the tests and the CLI.
namespace named {

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back(Edge{u, v});
  return Graph::from_edges(n, e);
}

/// Path on `n` vertices (n - 1 edges).
inline Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back(Edge{v, v + 1});
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back(Edge{v, v + 1});
  if (n >= 3) e.push_back(Edge{0, n - 1});
  return Graph::from_edges(n, e);
}

/// K_{1,leaves}, center 0.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back(Edge{0, v});
  return Graph::from_edges(leaves + 1, e);
}

inline Graph empty(int n) { return Graph::from_edges(n, std::span<const Edge>{}); }

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(Edge::make(i, (i + 1) % 5));
    e.push_back(Edge::make(i, i + 5));
    e.push_back(Edge::make(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::from_edges(10, e);
}

}  // namespace named

}  // namespace pack2dom
