#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pack2dom/graph.hpp"
#include "pack2dom/io.hpp"

namespace pack2dom {

// Exhaustive search is only promised up to this order.
inline constexpr int kMaxCanonicalOrder = 12;

struct CanonicalLabeling {
  /// graph6 string of the canonically relabeled graph.
  std::string form;
  /// label[v] is the canonical position of vertex v.
  std::vector<Vertex> label;
};

namespace detail {

// Color refinement to the coarsest equitable partition finer than `color`.
// Colors are dense ranks; a vertex's new color is the rank of
// (old color, sorted neighbor colors), so the result depends only on the
// colored graph and not on the vertex numbering.
inline void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  std::vector<std::pair<std::vector<int>, Vertex>> keys(static_cast<std::size_t>(n));
  std::vector<int> distinct(color.begin(), color.end());
  std::sort(distinct.begin(), distinct.end());
  int classes = static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& key = keys[v].first;
      key.clear();
      key.push_back(color[v]);
      for (Vertex w : g.neighbors(v)) key.push_back(color[w]);
      std::sort(key.begin() + 1, key.end());
      keys[v].second = v;
    }
    std::sort(keys.begin(), keys.end());
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && keys[i].first != keys[i - 1].first) ++rank;
      color[keys[i].second] = rank;
    }
    if (rank + 1 == classes) return;
    classes = rank + 1;
  }
}

inline bool twins(const Graph& g, Vertex a, Vertex b) {
  const VertexMask strip = ~((VertexMask{1} << a) | (VertexMask{1} << b));
  return (g.row(a) & strip) == (g.row(b) & strip);
}

// graph6 of g with vertex v moved to position label[v].
inline std::string relabeled_graph6(const Graph& g, const std::vector<int>& label) {
  const int n = g.order();
  std::vector<Vertex> at(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) at[label[v]] = v;
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    const VertexMask row = g.row(at[j]);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((row >> at[i]) & 1u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

struct CanonicalSearch {
  const Graph& g;
  std::string best;
  std::vector<Vertex> best_label;

  void leaf(const std::vector<int>& color) {
    // Discrete partition: color is the position.
    std::string form = relabeled_graph6(g, color);
    if (best.empty() || form < best) {
      best = std::move(form);
      best_label = color;
    }
  }

  void search(std::vector<int> color) {
    refine(g, color);
    const int n = g.order();
    std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
    for (int c : color) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      // Swapping twins is an automorphism fixing every individualized
      // vertex, so their subtrees produce the same leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) {
        continue;
      }
      tried.push_back(v);
      std::vector<int> next = color;
      for (Vertex w = 0; w < n; ++w) {
        next[w] = 2 * color[w] + ((color[w] == target && w != v) ? 1 : 0);
      }
      search(std::move(next));
    }
  }
};

}  // namespace detail

/// Canonical relabeling: refine, then individualize vertices of the first
/// non-singleton cell and recurse, keeping the leaf with the smallest
/// upper-triangle bit string. Equal forms iff isomorphic.
inline CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw BoundExceeded("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                        " vertices, got " + std::to_string(g.order()));
  }
  if (g.order() == 0) return {to_graph6(g), {}};
  detail::CanonicalSearch s{g, {}, {}};
  s.search(std::vector<int>(static_cast<std::size_t>(g.order()), 0));
  return {std::move(s.best), std::move(s.best_label)};
}

inline std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_form(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) {
    if (a.order() > kMaxCanonicalOrder || b.order() > kMaxCanonicalOrder) {
      throw BoundExceeded("isomorphism test supports at most " +
                          std::to_string(kMaxCanonicalOrder) + " vertices");
    }
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace pack2dom
