#pragma once

#include <algorithm>
#include <bit>
#include <span>
#include <vector>

#include "pack2dom/bounds.hpp"
#include "pack2dom/graph.hpp"

namespace pack2dom {

/// Vertex subset of a specific graph, stored sorted.
struct VertexSet {
  std::vector<Vertex> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

struct DominatingSet : VertexSet {};
struct VertexCover : VertexSet {};
struct IndependentSet : VertexSet {};

struct GammaResult {
  int gamma = 0;
  DominatingSet witness;
};

struct BetaResult {
  int beta = 0;
  VertexCover witness;
};

struct AlphaResult {
  int alpha = 0;
  IndependentSet witness;
};

namespace detail {

inline VertexMask to_mask(const Graph& g, std::span<const Vertex> s) {
  g.require_masks();
  VertexMask m = 0;
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    m |= VertexMask{1} << v;
  }
  return m;
}

inline std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

}  // namespace detail

inline bool is_dominating_set(const Graph& g, std::span<const Vertex> s) {
  const VertexMask chosen = detail::to_mask(g, s);
  VertexMask covered = 0;
  for (Vertex v : detail::to_vertices(chosen)) covered |= g.closed_row(v);
  return covered == g.all_vertices();
}

inline bool is_vertex_cover(const Graph& g, std::span<const Vertex> s) {
  const VertexMask chosen = detail::to_mask(g, s);
  for (const Edge& e : g.edges()) {
    if (!((chosen >> e.u) & 1u) && !((chosen >> e.v) & 1u)) return false;
  }
  return true;
}

inline bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
  const VertexMask chosen = detail::to_mask(g, s);
  for (Vertex v : detail::to_vertices(chosen)) {
    if (g.row(v) & chosen) return false;
  }
  return true;
}

namespace detail {

// Minimum set cover of V by closed neighborhoods.
class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : g_(g), all_(g.all_vertices()) {
    for (Vertex v = 0; v < g.order(); ++v) closed_.push_back(g.closed_row(v));
  }

  VertexMask solve() {
    best_ = greedy();
    best_size_ = popcount(best_);
    branch(0, 0);
    return best_;
  }

 private:
  VertexMask greedy() const {
    VertexMask covered = 0;
    VertexMask chosen = 0;
    while (covered != all_) {
      Vertex pick = -1;
      int gain = -1;
      for (Vertex v = 0; v < g_.order(); ++v) {
        const int gv = popcount(closed_[v] & ~covered);
        if (gv > gain) {
          gain = gv;
          pick = v;
        }
      }
      chosen |= VertexMask{1} << pick;
      covered |= closed_[pick];
    }
    return chosen;
  }

  // Uncovered vertices with pairwise disjoint closed neighborhoods need
  // distinct dominators; also no single pick covers more than max_gain.
  int lower_bound(VertexMask uncovered) const {
    int packed = 0;
    VertexMask blocked = 0;
    int max_gain = 0;
    for (VertexMask rest = uncovered; rest; rest &= rest - 1) {
      const Vertex u = std::countr_zero(rest);
      if (!((blocked >> u) & 1u)) {
        ++packed;
        // Any vertex that could dominate u is now spoken for.
        for (VertexMask d = closed_[u]; d; d &= d - 1) blocked |= closed_[std::countr_zero(d)];
      }
    }
    for (Vertex v = 0; v < g_.order(); ++v) max_gain = std::max(max_gain, popcount(closed_[v] & uncovered));
    const int by_gain = max_gain == 0 ? 0 : (popcount(uncovered) + max_gain - 1) / max_gain;
    return std::max(packed, by_gain);
  }

  void branch(VertexMask covered, VertexMask chosen) {
    const int depth = popcount(chosen);
    if (covered == all_) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_ = chosen;
      }
      return;
    }
    const VertexMask uncovered = all_ & ~covered;
    if (depth + lower_bound(uncovered) >= best_size_) return;
    // Uncovered vertex with fewest dominators; lowest index on ties.
    Vertex target = -1;
    int options = 65;
    for (VertexMask rest = uncovered; rest; rest &= rest - 1) {
      const Vertex u = std::countr_zero(rest);
      const int k = popcount(closed_[u]);
      if (k < options) {
        options = k;
        target = u;
      }
    }
    std::vector<Vertex> candidates = to_vertices(closed_[target]);
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
      return popcount(closed_[a] & uncovered) > popcount(closed_[b] & uncovered);
    });
    for (Vertex w : candidates) {
      branch(covered | closed_[w], chosen | (VertexMask{1} << w));
    }
  }

  const Graph& g_;
  VertexMask all_;
  std::vector<VertexMask> closed_;
  VertexMask best_ = 0;
  int best_size_ = 0;
};

// Minimum vertex cover with degree-0/1/2 reductions and max-degree branching.
class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : g_(g) {}

  VertexMask solve() {
    best_ = g_.all_vertices();
    best_size_ = g_.order();
    branch(g_.all_vertices(), 0);
    return best_;
  }

 private:
  int degree_in(Vertex v, VertexMask alive) const { return popcount(g_.row(v) & alive); }

  // Greedy maximal matching on the live subgraph: each matched edge needs
  // its own cover vertex.
  int matching_bound(VertexMask alive) const {
    int k = 0;
    VertexMask free = alive;
    for (VertexMask rest = alive; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      if (!((free >> v) & 1u)) continue;
      const VertexMask nb = g_.row(v) & free;
      if (nb) {
        const Vertex w = std::countr_zero(nb);
        free &= ~((VertexMask{1} << v) | (VertexMask{1} << w));
        ++k;
      }
    }
    return k;
  }

  void branch(VertexMask alive, VertexMask cover) {
    // Reductions to a fixed point.
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexMask rest = alive; rest; rest &= rest - 1) {
        const Vertex v = std::countr_zero(rest);
        if (!((alive >> v) & 1u)) continue;
        const VertexMask nb = g_.row(v) & alive;
        const int d = popcount(nb);
        if (d == 0) {
          alive &= ~(VertexMask{1} << v);
          changed = true;
        } else if (d == 1) {
          cover |= nb;
          alive &= ~(nb | (VertexMask{1} << v));
          changed = true;
        } else if (d == 2) {
          const Vertex a = std::countr_zero(nb);
          const Vertex b = std::countr_zero(nb & (nb - 1));
          if (g_.adjacent(a, b)) {
            cover |= nb;
            alive &= ~(nb | (VertexMask{1} << v));
            changed = true;
          }
        }
      }
    }
    const int size = popcount(cover);
    if (size + matching_bound(alive) >= best_size_) return;
    Vertex pick = -1;
    int max_deg = 0;
    for (VertexMask rest = alive; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const int d = degree_in(v, alive);
      if (d > max_deg) {
        max_deg = d;
        pick = v;
      }
    }
    if (pick < 0) {
      best_size_ = size;
      best_ = cover;
      return;
    }
    const VertexMask bit = VertexMask{1} << pick;
    branch(alive & ~bit, cover | bit);
    const VertexMask nb = g_.row(pick) & alive;
    branch(alive & ~(nb | bit), cover | nb);
  }

  const Graph& g_;
  VertexMask best_ = 0;
  int best_size_ = 0;
};

}  // namespace detail

/// Minimum dominating set by branch and bound over closed neighborhoods.
/// Isolated vertices are allowed; each must dominate itself.
inline GammaResult gamma_exact(const Graph& g, const SolverBounds& bounds = default_bounds()) {
  detail::require_at_most(g.order(), std::min(bounds.exact_vertices, kMaxMaskOrder), "order",
                          "gamma_exact");
  if (g.order() == 0) return {};
  const VertexMask best = detail::DominationSearch(g).solve();
  GammaResult r;
  r.witness.vertices = detail::to_vertices(best);
  r.gamma = r.witness.size();
  return r;
}

inline BetaResult beta_exact(const Graph& g, const SolverBounds& bounds = default_bounds()) {
  detail::require_at_most(g.order(), std::min(bounds.exact_vertices, kMaxMaskOrder), "order",
                          "beta_exact");
  if (g.order() == 0) return {};
  const VertexMask best = detail::CoverSearch(g).solve();
  BetaResult r;
  r.witness.vertices = detail::to_vertices(best);
  r.beta = r.witness.size();
  return r;
}

/// Maximum independent set as the complement of a minimum vertex cover.
inline AlphaResult alpha_exact(const Graph& g, const SolverBounds& bounds = default_bounds()) {
  const BetaResult cover = beta_exact(g, bounds);
  if (g.order() == 0) return {};
  const VertexMask in_cover = detail::to_mask(g, cover.witness.vertices);
  AlphaResult r;
  r.witness.vertices = detail::to_vertices(g.all_vertices() & ~in_cover);
  r.alpha = r.witness.size();
  return r;
}

/// Reference oracle: subsets by increasing size.
inline int gamma_bruteforce(const Graph& g, const SolverBounds& bounds = default_bounds()) {
  detail::require_at_most(g.order(), std::min(bounds.oracle_vertices, 62), "order",
                          "gamma_bruteforce");
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<VertexMask> closed;
  for (Vertex v = 0; v < n; ++v) closed.push_back(g.closed_row(v));
  const VertexMask all = g.all_vertices();
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack over k-subsets of n bits.
    VertexMask s = (VertexMask{1} << k) - 1;
    while (s <= all) {
      VertexMask covered = 0;
      for (VertexMask rest = s; rest; rest &= rest - 1) covered |= closed[std::countr_zero(rest)];
      if (covered == all) return k;
      const VertexMask c = s & (~s + 1);
      const VertexMask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n;
}

}  // namespace pack2dom
