#pragma once

// Simple undirected graphs with bitset adjacency rows.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thetalab/error.hpp"

namespace thetalab {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-capacity set of vertices stored as 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t v = 0; v < capacity; ++v) s.insert(v);
    return s;
  }

  std::size_t capacity() const noexcept { return capacity_; }

  bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes every member of o.
  VertexSet& subtract(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }

  std::size_t intersection_size(const VertexSet& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return c;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

  /// Throws LoopRejected or IndexOutOfRange; duplicate edges collapse.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::vector<std::string> labels = {}) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw Error(ErrorKind::kIndexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," +
                        std::to_string(n) + ")");
      }
      if (u == v) throw Error(ErrorKind::kLoopRejected, "loop at vertex " + std::to_string(u));
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
    }
    g.set_labels(std::move(labels));
    return g;
  }

  std::size_t n() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex u) const noexcept { return adj_[u]; }
  std::size_t degree(Vertex u) const noexcept { return adj_[u].size(); }

  std::size_t num_edges() const noexcept {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u].members()) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_) {
      throw Error(ErrorKind::kDimensionMismatch, "label count must equal vertex count");
    }
    labels_ = std::move(labels);
  }

  /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(const std::vector<Vertex>& vertices) const {
    Graph h(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (adjacent(vertices[i], vertices[j])) {
          h.adj_[i].insert(j);
          h.adj_[j].insert(i);
        }
      }
    }
    return h;
  }

  Graph without_vertex(Vertex v) const {
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < n_; ++u) {
      if (u != v) keep.push_back(u);
    }
    return induced(keep);
  }

  // Labels are provenance only and do not take part in equality.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  friend Graph complement(const Graph& g);

  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

inline Graph complement(const Graph& g) {
  Graph h(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (u != v && !g.adjacent(u, v)) h.adj_[u].insert(v);
    }
  }
  h.labels_ = g.labels_;
  return h;
}

// Standard small families.

inline Graph make_empty(std::size_t n) { return Graph(n); }

inline Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

inline Graph make_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edges(n, edges);
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph::from_edges(a + b, edges);
}

inline Graph make_star(std::size_t leaves) { return make_complete_bipartite(1, leaves); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph make_petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

}  // namespace thetalab
