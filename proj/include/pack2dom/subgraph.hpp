#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pack2dom/graph.hpp"

namespace pack2dom {

/// Subgraph spanned by an edge set: its edges are exactly the given edges and
/// its vertices are their endpoints (no chords are added).
class EdgeSubgraph {
 public:
  EdgeSubgraph() = default;

  int parent_order() const { return parent_order_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// Restricted degree deg_H(v); zero for vertices outside H.
  int degree(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return 0;
    return static_cast<int>(nbrs_[static_cast<std::size_t>(it - vertices_.begin())].size());
  }

  /// Restricted open neighborhood N_H(v).
  std::vector<Vertex> neighbors(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return {};
    return nbrs_[static_cast<std::size_t>(it - vertices_.begin())];
  }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : nbrs_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  /// Connected components as vertex lists, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const {
    const std::size_t k = vertices_.size();
    std::vector<int> comp(k, -1);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t start = 0; start < k; ++start) {
      if (comp[start] >= 0) continue;
      const int id = static_cast<int>(out.size());
      out.emplace_back();
      std::vector<std::size_t> stack{start};
      comp[start] = id;
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        out.back().push_back(vertices_[i]);
        for (Vertex w : nbrs_[i]) {
          std::size_t j = index_of(w);
          if (comp[j] < 0) {
            comp[j] = id;
            stack.push_back(j);
          }
        }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }

 private:
  friend EdgeSubgraph edge_subgraph(const Graph& g, std::span<const Edge> edges);

  std::size_t index_of(Vertex v) const {
    return static_cast<std::size_t>(
        std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
  }

  int parent_order_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> nbrs_;
};

inline EdgeSubgraph edge_subgraph(const Graph& g, std::span<const Edge> edges) {
  EdgeSubgraph h;
  h.parent_order_ = g.order();
  for (Edge e : edges) {
    e = Edge::make(e.u, e.v);
    if (!g.has_edge(e)) throw GraphError("edge " + to_string(e) + " is not in the parent graph");
    h.edges_.push_back(e);
  }
  std::sort(h.edges_.begin(), h.edges_.end());
  h.edges_.erase(std::unique(h.edges_.begin(), h.edges_.end()), h.edges_.end());
  for (const Edge& e : h.edges_) {
    h.vertices_.push_back(e.u);
    h.vertices_.push_back(e.v);
  }
  std::sort(h.vertices_.begin(), h.vertices_.end());
  h.vertices_.erase(std::unique(h.vertices_.begin(), h.vertices_.end()), h.vertices_.end());
  h.nbrs_.assign(h.vertices_.size(), {});
  for (const Edge& e : h.edges_) {
    h.nbrs_[h.index_of(e.u)].push_back(e.v);
    h.nbrs_[h.index_of(e.v)].push_back(e.u);
  }
  for (auto& nb : h.nbrs_) std::sort(nb.begin(), nb.end());
  return h;
}

enum class ComponentShape { path, cycle, other };

struct ComponentKind {
  ComponentShape shape = ComponentShape::other;
  int length = 0;  // edge count

  friend bool operator==(const ComponentKind&, const ComponentKind&) = default;
};

inline std::string to_string(const ComponentKind& k) {
  switch (k.shape) {
    case ComponentShape::path: return "Path(" + std::to_string(k.length) + ")";
    case ComponentShape::cycle: return "Cycle(" + std::to_string(k.length) + ")";
    case ComponentShape::other: break;
  }
  return "Other(" + std::to_string(k.length) + ")";
}

/// One entry per component of h, in component order. A connected graph with
/// maximum degree <= 2 is a path when it has one more vertex than edges and a
/// cycle when the counts are equal.
inline std::vector<ComponentKind> classify_components(const EdgeSubgraph& h) {
  std::vector<ComponentKind> out;
  for (const auto& comp : h.components()) {
    int degree_sum = 0;
    int max_deg = 0;
    for (Vertex v : comp) {
      const int d = h.degree(v);
      degree_sum += d;
      max_deg = std::max(max_deg, d);
    }
    const int edges = degree_sum / 2;
    const int verts = static_cast<int>(comp.size());
    ComponentKind kind{ComponentShape::other, edges};
    if (max_deg <= 2) {
      kind.shape = edges == verts ? ComponentShape::cycle : ComponentShape::path;
    }
    out.push_back(kind);
  }
  return out;
}

}  // namespace pack2dom
