#pragma once

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pack2dom/graph.hpp"

namespace pack2dom {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Short-form graph6 only: one header byte, so at most 62 vertices.
inline constexpr int kMaxGraph6Order = 62;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Bits are the upper triangle in column order: (0,1) (0,2) (1,2) (0,3) ...,
/// packed six to a byte, high bit first, each group offset by 63.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw BoundExceeded("graph6 short form supports at most 62 vertices, got " +
                        std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

inline Graph parse_graph6(std::string_view line) {
  line = detail::trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("malformed graph6: empty string");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError("malformed graph6: byte out of range");
  }
  const int n = line[0] - 63;
  if (n > kMaxGraph6Order) {
    throw ParseError("graph6 long form (more than 62 vertices) is not supported");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - 1 != bytes) {
    throw ParseError("malformed graph6: expected " + std::to_string(bytes) +
                     " data bytes for " + std::to_string(n) + " vertices, got " +
                     std::to_string(line.size() - 1));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back(Edge{i, j});
    }
  }
  if (bits % 6 != 0) {
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (((line.back() - 63) & pad_mask) != 0) {
      throw ParseError("malformed graph6: nonzero padding bits");
    }
  }
  return Graph::from_edges(n, edges);
}

/// "n m" header followed by m lines "u v" (0-based); '#' starts a comment.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

/// Reads edge-list graphs one at a time from a stream. Several graphs may be
/// concatenated; each begins with its own header line.
class EdgeListReader {
 public:
  explicit EdgeListReader(std::istream& in) : in_(in) {}

  std::optional<Graph> next() {
    std::string line;
    if (!next_data_line(line)) return std::nullopt;
    long long n = 0;
    long long m = 0;
    {
      std::istringstream hs(line);
      std::string extra;
      if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0) {
        fail("expected header \"n m\"");
      }
    }
    if (n > 100000) fail("vertex count too large");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
      if (!next_data_line(line)) fail("truncated edge list: expected " + std::to_string(m) + " edges");
      std::istringstream es(line);
      long long u = 0;
      long long v = 0;
      std::string extra;
      if (!(es >> u >> v) || (es >> extra)) fail("expected edge \"u v\"");
      if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
      if (u == v) fail("self-loop");
      edges.push_back(Edge::make(static_cast<int>(u), static_cast<int>(v)));
    }
    auto built = Graph::from_edges(static_cast<int>(n), edges, &last_duplicates_);
    return built;
  }

  std::size_t line_number() const { return line_no_; }
  std::size_t last_duplicates() const { return last_duplicates_; }

 private:
  bool next_data_line(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_no_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto t = detail::trim(raw);
      if (!t.empty()) {
        out.assign(t);
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + what);
  }

  std::istream& in_;
  std::size_t line_no_ = 0;
  std::size_t last_duplicates_ = 0;
};

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  EdgeListReader reader(in);
  auto g = reader.next();
  if (!g) throw ParseError("empty edge list");
  return *std::move(g);
}

}  // namespace pack2dom
