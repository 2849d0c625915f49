#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "pack2dom/bounds.hpp"
#include "pack2dom/graph.hpp"
#include "pack2dom/matching.hpp"

namespace pack2dom {

/// Edge set in which no vertex meets more than two edges.
class TwoPacking {
 public:
  TwoPacking() = default;

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }

  friend bool operator==(const TwoPacking&, const TwoPacking&) = default;
  friend bool operator<(const TwoPacking& a, const TwoPacking& b) { return a.edges_ < b.edges_; }

 private:
  friend TwoPacking make_two_packing(const Graph& g, std::vector<Edge> edges);
  std::vector<Edge> edges_;
};

enum class PackingMethod { oracle, matching };

struct PackingResult {
  int nu2 = 0;
  TwoPacking witness;
  PackingMethod method = PackingMethod::matching;
};

namespace detail {

inline std::vector<Edge> normalized_subset(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (Edge e : edges) {
    e = Edge::make(e.u, e.v);
    if (!g.has_edge(e)) throw GraphError("edge " + to_string(e) + " is not in the graph");
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

inline bool is_2packing(const Graph& g, std::span<const Edge> edges) {
  const auto set = detail::normalized_subset(g, edges);
  std::vector<int> load(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : set) {
    if (++load[e.u] > 2 || ++load[e.v] > 2) return false;
  }
  return true;
}

/// Throws GraphError unless `edges` is a 2-packing of g.
inline TwoPacking make_two_packing(const Graph& g, std::vector<Edge> edges) {
  if (!is_2packing(g, edges)) throw GraphError("edge set is not a 2-packing");
  TwoPacking p;
  p.edges_ = detail::normalized_subset(g, edges);
  return p;
}

namespace detail {

/// Maximum subgraph of (n, edges) with deg(v) <= caps[v], caps in {0,1,2}.
///
/// Each vertex v becomes caps[v] copies; each edge uv becomes two gadget
/// nodes a-b with a joined to every copy of u and b to every copy of v. A
/// maximum matching then has size |edges| + (optimum), and the edges whose
/// gadget nodes are both matched to copies form an optimal subgraph.
inline int max_degree_constrained(int n, std::span<const int> caps, std::span<const Edge> edges,
                                  std::vector<Edge>* witness = nullptr) {
  std::vector<int> first_copy(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) first_copy[v + 1] = first_copy[v] + caps[v];
  const int copies = first_copy[n];
  const int total = copies + 2 * static_cast<int>(edges.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int a = copies + 2 * static_cast<int>(i);
    const int b = a + 1;
    link(a, b);
    for (int c = first_copy[edges[i].u]; c < first_copy[edges[i].u + 1]; ++c) link(a, c);
    for (int c = first_copy[edges[i].v]; c < first_copy[edges[i].v + 1]; ++c) link(b, c);
  }
  BlossomMatcher matcher(std::move(adj));
  const auto& mate = matcher.solve();
  const int value = matcher.size() - static_cast<int>(edges.size());
  if (witness) {
    witness->clear();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int a = copies + 2 * static_cast<int>(i);
      if (mate[a] != -1 && mate[a] < copies && mate[a + 1] != -1 && mate[a + 1] < copies) {
        witness->push_back(edges[i]);
      }
    }
  }
  return value;
}

/// Include-first DFS over the sorted edge list with a residual-capacity
/// bound. Visits same-size packings in lexicographic order, so the first
/// optimum found is the lexicographically smallest.
class PackingSearch {
 public:
  PackingSearch(const Graph& g, int target, bool collect_all)
      : edges_(g.edges()),
        load_(static_cast<std::size_t>(g.order()), 0),
        remaining_(static_cast<std::size_t>(g.order()), 0),
        target_(target),
        collect_all_(collect_all) {
    for (Vertex v = 0; v < g.order(); ++v) remaining_[v] = g.degree(v);
  }

  void run() { dfs(0); }

  int best_size() const { return best_size_; }
  const std::vector<Edge>& best() const { return best_; }
  const std::vector<std::vector<Edge>>& all() const { return all_; }

 private:
  int residual_bound() const {
    int slack = 0;
    for (std::size_t v = 0; v < load_.size(); ++v) slack += std::min(2 - load_[v], remaining_[v]);
    return static_cast<int>(current_.size()) + slack / 2;
  }

  void dfs(std::size_t i) {
    const int bound = residual_bound();
    if (collect_all_ ? bound < target_ : bound <= best_size_) return;
    if (i == edges_.size()) {
      const int k = static_cast<int>(current_.size());
      if (collect_all_) {
        if (k == target_) all_.push_back(current_);
      } else if (k > best_size_) {
        best_size_ = k;
        best_ = current_;
      }
      return;
    }
    const Edge e = edges_[i];
    --remaining_[e.u];
    --remaining_[e.v];
    if (load_[e.u] < 2 && load_[e.v] < 2) {
      ++load_[e.u];
      ++load_[e.v];
      current_.push_back(e);
      dfs(i + 1);
      current_.pop_back();
      --load_[e.u];
      --load_[e.v];
    }
    dfs(i + 1);
    ++remaining_[e.u];
    ++remaining_[e.v];
  }

  std::vector<Edge> edges_;
  std::vector<int> load_;
  std::vector<int> remaining_;
  std::vector<Edge> current_;
  int target_;
  bool collect_all_;
  int best_size_ = -1;
  std::vector<Edge> best_;
  std::vector<std::vector<Edge>> all_;
};

}  // namespace detail

/// Reference oracle: exhaustive search with degree pruning.
inline PackingResult nu2_bruteforce(const Graph& g, const SolverBounds& bounds = default_bounds()) {
  detail::require_at_most(g.size(), bounds.oracle_edges, "edge count", "nu2_bruteforce");
  detail::PackingSearch search(g, 0, false);
  search.run();
  PackingResult r;
  r.nu2 = search.best_size();
  r.witness = make_two_packing(g, search.best());
  r.method = PackingMethod::oracle;
  return r;
}

/// nu2 alone, without witness extraction.
inline int nu2_number(const Graph& g) {
  const std::vector<int> caps(static_cast<std::size_t>(g.order()), 2);
  return detail::max_degree_constrained(g.order(), caps, g.edges());
}

/// nu2 through the degree-constrained-subgraph reduction to matching.
/// The witness is the lexicographically smallest maximum 2-packing, found by
/// fixing edges greedily in sorted order and re-solving the residual
/// instance after each tentative choice.
inline PackingResult nu2_matching(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.order();
  std::vector<int> caps(static_cast<std::size_t>(n), 2);
  const int nu2 = detail::max_degree_constrained(n, caps, edges);

  std::vector<Edge> chosen;
  for (std::size_t i = 0; i < edges.size() && static_cast<int>(chosen.size()) < nu2; ++i) {
    const Edge e = edges[i];
    if (caps[e.u] == 0 || caps[e.v] == 0) continue;
    --caps[e.u];
    --caps[e.v];
    const std::span<const Edge> rest(edges.data() + i + 1, edges.size() - i - 1);
    const int completion = static_cast<int>(chosen.size()) + 1 +
                           detail::max_degree_constrained(n, caps, rest);
    if (completion == nu2) {
      chosen.push_back(e);
    } else {
      ++caps[e.u];
      ++caps[e.v];
    }
  }
  PackingResult r;
  r.nu2 = nu2;
  r.witness = make_two_packing(g, chosen);
  r.method = PackingMethod::matching;
  return r;
}

/// Every 2-packing of maximum size, in lexicographic order.
inline std::vector<TwoPacking> enumerate_max_2packings(const Graph& g,
                                                       const SolverBounds& bounds = default_bounds()) {
  detail::require_at_most(g.size(), bounds.oracle_edges, "edge count", "enumerate_max_2packings");
  const int nu2 = nu2_number(g);
  detail::PackingSearch search(g, nu2, true);
  search.run();
  std::vector<TwoPacking> out;
  out.reserve(search.all().size());
  for (const auto& set : search.all()) out.push_back(make_two_packing(g, set));
  return out;
}

}  // namespace pack2dom
