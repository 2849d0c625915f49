#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pack2dom/graph.hpp"

namespace pack2dom {

/// Parameters of the extremal tree: s extra pendant 2-paths and t pendant
/// leaves at the center, r = s + 4.
struct FamilyParams {
  int s = 1;
  int t = 1;
  int r = 5;

  static FamilyParams make(int s, int t) {
    if (s < 1 || t < 1) {
      throw std::invalid_argument("family parameters need s >= 1 and t >= 1, got s=" +
                                  std::to_string(s) + " t=" + std::to_string(t));
    }
    return {s, t, s + 4};
  }

  int order() const { return 5 + 2 * s + t; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

inline std::string to_string(const FamilyParams& p) {
  return "T(" + std::to_string(p.s) + "," + std::to_string(p.t) + "," + std::to_string(p.r) + ")";
}

/// Which vertex plays which role: v[0..4] the central path with v[2] the
/// center, p[i]-q[i] the extra 2-paths (p adjacent to the center), w the
/// leaves.
struct FamilyRoles {
  std::vector<Vertex> v;
  std::vector<Vertex> p;
  std::vector<Vertex> q;
  std::vector<Vertex> w;

  friend bool operator==(const FamilyRoles&, const FamilyRoles&) = default;
};

struct FamilyMember {
  Graph graph;
  FamilyRoles roles;
  FamilyParams params;
};

/// v0..v4 get labels 0..4, then p_1..p_s, q_1..q_s, w_1..w_t.
inline FamilyMember generate_family(int s, int t) {
  const FamilyParams params = FamilyParams::make(s, t);
  FamilyRoles roles;
  for (Vertex i = 0; i < 5; ++i) roles.v.push_back(i);
  for (int i = 0; i < s; ++i) roles.p.push_back(5 + i);
  for (int i = 0; i < s; ++i) roles.q.push_back(5 + s + i);
  for (int i = 0; i < t; ++i) roles.w.push_back(5 + 2 * s + i);

  std::vector<Edge> edges;
  for (Vertex i = 0; i < 4; ++i) edges.push_back(Edge{i, i + 1});
  const Vertex center = roles.v[2];
  for (int i = 0; i < s; ++i) {
    edges.push_back(Edge::make(center, roles.p[i]));
    edges.push_back(Edge::make(roles.p[i], roles.q[i]));
  }
  for (Vertex w : roles.w) edges.push_back(Edge::make(center, w));
  return {Graph::from_edges(params.order(), edges), std::move(roles), params};
}

enum class RejectReason { not_a_tree, no_center, bad_leg, too_few_2_legs, no_leaf_leg };

inline const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::not_a_tree: return "not-a-tree";
    case RejectReason::no_center: return "no-center";
    case RejectReason::bad_leg: return "bad-leg";
    case RejectReason::too_few_2_legs: return "too-few-2-legs";
    case RejectReason::no_leaf_leg: return "no-leaf-leg";
  }
  return "unknown";
}

struct Recognition {
  std::optional<FamilyParams> params;
  std::optional<FamilyRoles> roles;
  RejectReason reason = RejectReason::not_a_tree;  // meaningful only when rejected

  bool accepted() const { return params.has_value(); }
};

namespace detail {

inline bool is_tree(const Graph& g) {
  if (g.order() == 0 || g.size() != g.order() - 1) return false;
  // n - 1 edges plus connectivity.
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

inline Recognition recognize_at(const Graph& g, Vertex center) {
  Recognition out;
  std::vector<std::pair<Vertex, Vertex>> long_legs;  // (near, far)
  std::vector<Vertex> leaves;
  for (Vertex x : g.neighbors(center)) {
    if (g.degree(x) == 1) {
      leaves.push_back(x);
      continue;
    }
    if (g.degree(x) != 2) {
      out.reason = RejectReason::bad_leg;
      return out;
    }
    const Vertex y = g.neighbors(x)[0] == center ? g.neighbors(x)[1] : g.neighbors(x)[0];
    if (g.degree(y) != 1) {
      out.reason = RejectReason::bad_leg;
      return out;
    }
    long_legs.emplace_back(x, y);
  }
  if (long_legs.size() < 3) {
    out.reason = RejectReason::too_few_2_legs;
    return out;
  }
  if (leaves.empty()) {
    out.reason = RejectReason::no_leaf_leg;
    return out;
  }
  FamilyRoles roles;
  roles.v = {long_legs[0].second, long_legs[0].first, center, long_legs[1].first,
             long_legs[1].second};
  for (std::size_t i = 2; i < long_legs.size(); ++i) {
    roles.p.push_back(long_legs[i].first);
    roles.q.push_back(long_legs[i].second);
  }
  roles.w = leaves;
  out.params = FamilyParams::make(static_cast<int>(long_legs.size()) - 2,
                                  static_cast<int>(leaves.size()));
  out.roles = std::move(roles);
  return out;
}

}  // namespace detail

/// Decides membership in the family structurally: g must be a tree made of
/// one center whose removal leaves only paths on one or two vertices, each
/// hanging from the center by an end. Linear time.
inline Recognition recognize(const Graph& g) {
  Recognition out;
  if (!detail::is_tree(g)) {
    out.reason = RejectReason::not_a_tree;
    return out;
  }
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) candidates.push_back(v);
  }
  if (candidates.empty()) {
    out.reason = RejectReason::no_center;
    return out;
  }
  std::optional<Recognition> first_rejection;
  for (Vertex c : candidates) {
    Recognition r = detail::recognize_at(g, c);
    if (r.accepted()) return r;
    if (!first_rejection) first_rejection = std::move(r);
  }
  return *first_rejection;
}

struct FamilyInvariants {
  int gamma = 0;
  int nu2 = 0;
};

/// Closed forms for members of the family: gamma = r - 1, nu2 = r.
inline FamilyInvariants family_invariants(const FamilyParams& p) {
  const FamilyParams checked = FamilyParams::make(p.s, p.t);
  if (checked.r != p.r) throw std::invalid_argument("family parameters need r = s + 4");
  return {p.r - 1, p.r};
}

}  // namespace pack2dom
