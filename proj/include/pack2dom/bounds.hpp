#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>

#include "pack2dom/graph.hpp"

namespace pack2dom {

/// Size limits for the exhaustive routines. The defaults keep every call
/// within seconds; harnesses may raise or lower them through
/// PACK2DOM_SOLVER_BOUND.
struct SolverBounds {
  int oracle_edges = 24;     // nu2_bruteforce, enumerate_max_2packings
  int oracle_vertices = 20;  // gamma_bruteforce
  int exact_vertices = 40;   // gamma_exact, beta_exact, alpha_exact

  /// Accepts "N" (sets oracle_edges) or a comma list of key=value with keys
  /// oracle_edges, oracle_vertices, exact_vertices.
  static SolverBounds parse(std::string_view value) {
    SolverBounds b;
    std::string text(value);
    if (text.find('=') == std::string::npos) {
      b.oracle_edges = to_int(text);
      return b;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad solver bound item: " + item);
      const std::string key = item.substr(0, eq);
      const int value = to_int(item.substr(eq + 1));
      if (key == "oracle_edges") {
        b.oracle_edges = value;
      } else if (key == "oracle_vertices") {
        b.oracle_vertices = value;
      } else if (key == "exact_vertices") {
        b.exact_vertices = value;
      } else {
        throw std::invalid_argument("unknown solver bound: " + key);
      }
    }
    return b;
  }

  static SolverBounds from_environment() {
    const char* env = std::getenv("PACK2DOM_SOLVER_BOUND");
    if (env == nullptr || *env == '\0') return {};
    return parse(env);
  }

 private:
  static int to_int(const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument("bad solver bound value: " + s);
    return v;
  }
};

/// Process-wide bounds, read from the environment once.
inline const SolverBounds& default_bounds() {
  static const SolverBounds bounds = SolverBounds::from_environment();
  return bounds;
}

namespace detail {

inline void require_at_most(int value, int limit, const char* what, const char* routine) {
  if (value > limit) {
    throw BoundExceeded(std::string(routine) + ": " + what + " " + std::to_string(value) +
                        " exceeds bound " + std::to_string(limit));
  }
}

}  // namespace detail

}  // namespace pack2dom
