#pragma once

#include <queue>
#include <vector>

#include "pack2dom/graph.hpp"

namespace pack2dom {

/// Maximum-cardinality matching in a general graph given as adjacency lists.
///
/// Edmonds' algorithm: grow an alternating BFS forest from each free vertex,
/// contracting odd cycles (blossoms) onto their base, and augment along the
/// first free vertex reached. O(V^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adjacency)
      : adj_(std::move(adjacency)),
        n_(static_cast<int>(adj_.size())),
        mate_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        in_tree_(static_cast<std::size_t>(n_)),
        in_blossom_(static_cast<std::size_t>(n_)) {}

  /// Runs to completion and returns mate[v] (-1 when unmatched).
  const std::vector<int>& solve() {
    // Greedy warm start.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (mate_[w] == -1 && w != v) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      int v = find_augmenting_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return mate_;
  }

  int size() const {
    int matched = 0;
    for (int v = 0; v < n_; ++v) matched += mate_[v] != -1;
    return matched / 2;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int blossom_base, int child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    in_tree_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // Edge between two even vertices: contract the blossom.
          const int b = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          in_tree_[mate_[to]] = 1;
          queue.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  std::vector<std::vector<int>> adj_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
};

/// Maximum matching of h as a sorted edge list.
inline std::vector<Edge> maximum_matching(const Graph& h) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.order()));
  for (Vertex v = 0; v < h.order(); ++v) adj[v] = h.neighbors(v);
  BlossomMatcher matcher(std::move(adj));
  const auto& mate = matcher.solve();
  std::vector<Edge> out;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (mate[v] > v) out.push_back(Edge{v, mate[v]});
  }
  return out;
}

}  // namespace pack2dom
