#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "pack2dom/canonical.hpp"
#include "pack2dom/graph.hpp"
#include "pack2dom/io.hpp"

namespace pack2dom {

// Largest order the built-in generator will produce.
inline constexpr int kMaxBuiltinOrder = 8;

struct StreamItem {
  Graph graph;
  std::string graph6;    // as read, or the canonical form for built-in streams
  std::size_t line = 0;  // 1-based source line; 0 for built-in streams
};

/// Single-consumer stream of graphs from the built-in generator or a graph6
/// file.
class GraphStream {
 public:
  using Source = std::function<std::optional<StreamItem>()>;

  GraphStream(std::string descriptor, Source source,
              std::shared_ptr<std::size_t> skipped = std::make_shared<std::size_t>(0))
      : descriptor_(std::move(descriptor)),
        source_(std::move(source)),
        skipped_(std::move(skipped)) {}

  std::optional<StreamItem> next() {
    auto item = source_();
    if (item) ++count_;
    return item;
  }

  const std::string& descriptor() const { return descriptor_; }
  std::size_t count() const { return count_; }

  /// Disconnected graphs dropped by a connected-only file stream.
  std::size_t skipped() const { return *skipped_; }

  std::vector<StreamItem> drain() {
    std::vector<StreamItem> out;
    while (auto item = next()) out.push_back(std::move(*item));
    return out;
  }

 private:
  std::string descriptor_;
  Source source_;
  std::size_t count_ = 0;
  std::shared_ptr<std::size_t> skipped_;
};

namespace detail {

/// Canonical forms of every graph on n vertices, sorted. Grows the isomorphism
/// classes one edge at a time: every graph with k+1 edges arises from one
/// with k edges by adding an edge, and canonical forms collapse duplicates.
inline std::vector<std::string> all_canonical_graphs(int n) {
  std::vector<std::string> everything;
  std::vector<std::string> level{canonical_form(named::empty(n))};
  while (!level.empty()) {
    everything.insert(everything.end(), level.begin(), level.end());
    std::unordered_set<std::string> next;
    for (const std::string& form : level) {
      const Graph g = parse_graph6(form);
      for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
          if (!g.adjacent(u, v)) next.insert(canonical_form(add_edge(g, Edge{u, v})));
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::sort(everything.begin(), everything.end());
  return everything;
}

}  // namespace detail

/// Every connected graph on exactly n vertices, once per isomorphism class,
/// canonically labeled and in ascending order of canonical form.
inline GraphStream enumerate_connected(int n) {
  if (n < 1 || n > kMaxBuiltinOrder) {
    throw BoundExceeded("built-in enumeration supports 1 <= n <= " +
                        std::to_string(kMaxBuiltinOrder) + ", got " + std::to_string(n) +
                        "; use a graph6 corpus for larger orders");
  }
  auto forms = std::make_shared<std::vector<std::string>>();
  for (std::string& form : detail::all_canonical_graphs(n)) {
    if (is_connected(parse_graph6(form))) forms->push_back(std::move(form));
  }
  auto pos = std::make_shared<std::size_t>(0);
  return GraphStream("builtin:" + std::to_string(n),
                     [forms, pos]() -> std::optional<StreamItem> {
                       if (*pos >= forms->size()) return std::nullopt;
                       const std::string& form = (*forms)[(*pos)++];
                       return StreamItem{parse_graph6(form), form, 0};
                     });
}

/// Reads one graph6 per line (LF or CRLF, blank lines ignored). A malformed
/// line raises ParseError naming its line number. With expect_connected,
/// disconnected graphs are counted and skipped with a warning on stderr.
inline GraphStream ingest_graph6(std::istream& in, bool expect_connected,
                                 std::string descriptor = "stream") {
  auto line_no = std::make_shared<std::size_t>(0);
  auto skipped = std::make_shared<std::size_t>(0);
  auto source = [&in, expect_connected, line_no, skipped,
                 descriptor]() -> std::optional<StreamItem> {
    std::string line;
    while (std::getline(in, line)) {
      ++*line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (detail::trim(line).empty()) continue;
      Graph g;
      try {
        g = parse_graph6(line);
      } catch (const ParseError& e) {
        throw ParseError(descriptor + ": line " + std::to_string(*line_no) + ": " + e.what());
      }
      if (expect_connected && !is_connected(g)) {
        ++*skipped;
        std::cerr << "warning: " << descriptor << ": line " << *line_no
                  << ": skipping disconnected graph\n";
        continue;
      }
      return StreamItem{std::move(g), std::string(detail::trim(line)), *line_no};
    }
    return std::nullopt;
  };
  return GraphStream(std::move(descriptor), std::move(source), std::move(skipped));
}

/// File-backed variant; the stream owns the file handle.
inline GraphStream ingest_graph6(const std::string& path, bool expect_connected) {
  auto file = std::make_shared<std::ifstream>(path);
  if (!*file) throw std::runtime_error("cannot open " + path);
  auto skipped = std::make_shared<std::size_t>(0);
  auto inner = std::make_shared<GraphStream>(ingest_graph6(*file, expect_connected, path));
  return GraphStream(
      path, [file, inner, skipped]() {
        auto item = inner->next();
        *skipped = inner->skipped();
        return item;
      },
      skipped);
}

}  // namespace pack2dom
