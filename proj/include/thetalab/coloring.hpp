#pragma once

// BFS layering and exact chromatic numbers on small graphs.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/freeness.hpp"
#include "thetalab/graph.hpp"

namespace thetalab {

/// Layers A_0 = {root}, A_1, ... by exact distance; unreachable vertices are omitted.
inline std::vector<std::vector<Vertex>> bfs_layers(const Graph& g, Vertex root) {
  if (root >= g.n()) throw Error(ErrorKind::kIndexOutOfRange, "root outside vertex range");
  const auto dist = detail::bfs_distances(g, root, VertexSet::full(g.n()));
  std::vector<std::vector<Vertex>> layers;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist[v] == std::numeric_limits<std::size_t>::max()) continue;
    if (layers.size() <= dist[v]) layers.resize(dist[v] + 1);
    layers[dist[v]].push_back(v);
  }
  return layers;
}

inline constexpr std::size_t kMaxColoringVertices = 40;

namespace detail {

// DSATUR backtracking for a proper colouring with at most k colours.
class KColoring {
 public:
  KColoring(const Graph& g, std::size_t k) : g_(g), k_(k), color_(g.n(), kNone) {}

  bool run() { return assign(0); }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::uint64_t forbidden(Vertex v) const {
    std::uint64_t mask = 0;
    for (Vertex w : g_.neighbors(v).members()) {
      if (color_[w] != kNone) mask |= std::uint64_t{1} << color_[w];
    }
    return mask;
  }

  bool assign(std::size_t colored) {
    const std::size_t n = g_.n();
    if (colored == n) return true;
    Vertex pick = n;
    int best_sat = -1;
    std::size_t best_deg = 0;
    std::uint64_t pick_mask = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (color_[v] != kNone) continue;
      const std::uint64_t mask = forbidden(v);
      const int sat = std::popcount(mask);
      if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = g_.degree(v);
        pick_mask = mask;
      }
    }
    // New colours are interchangeable, so only one unused colour is tried.
    std::size_t used = 0;
    for (auto c : color_) {
      if (c != kNone) used = std::max(used, c + 1);
    }
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if ((pick_mask >> c) & 1U) continue;
      color_[pick] = c;
      if (assign(colored + 1)) return true;
    }
    color_[pick] = kNone;
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<std::size_t> color_;
};

inline std::size_t greedy_color_count(const Graph& g) {
  std::vector<Vertex> order(g.n());
  for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> color(g.n(), std::numeric_limits<std::size_t>::max());
  std::size_t used = 0;
  for (Vertex v : order) {
    std::vector<bool> taken(used + 1, false);
    for (Vertex w : g.neighbors(v).members()) {
      if (color[w] < taken.size()) taken[color[w]] = true;
    }
    std::size_t c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace detail

/// Exact chromatic number; refuses graphs above kMaxColoringVertices.
inline std::size_t chromatic_number_exact(const Graph& g) {
  if (g.n() > kMaxColoringVertices) {
    throw Error(ErrorKind::kComplexityRefused,
                "exact colouring limited to " + std::to_string(kMaxColoringVertices) + " vertices");
  }
  if (g.n() == 0) return 0;
  const std::size_t lower = clique_number(g);
  const std::size_t upper = detail::greedy_color_count(g);
  for (std::size_t k = lower; k < upper; ++k) {
    if (detail::KColoring(g, k).run()) return k;
  }
  return upper;
}

struct LayerEntry {
  Vertex root = 0;
  std::size_t layer = 0;
  std::size_t size = 0;
  std::size_t chromatic = 0;
};

struct LayerColoringReport {
  bool pass = true;
  std::size_t bound = 0;  // k - 2
  std::size_t max_layer_chromatic = 0;
  std::vector<LayerEntry> entries;
};

/// For a graph with no cycle of length exactly k, checks chi(G[A_i]) <= k - 2
/// for every root and every layer i <= (k-1)/2.
inline LayerColoringReport layer_chromatic_check(const Graph& g, std::size_t k) {
  if (k < 3) throw Error(ErrorKind::kPreconditionViolated, "cycle length must be >= 3");
  if (contains_cycle(g, k)) {
    throw Error(ErrorKind::kPreconditionViolated,
                "graph contains a cycle of length " + std::to_string(k));
  }
  LayerColoringReport report;
  report.bound = k - 2;
  const std::size_t max_layer = (k - 1) / 2;
  for (Vertex root = 0; root < g.n(); ++root) {
    const auto layers = bfs_layers(g, root);
    for (std::size_t i = 0; i < layers.size() && i <= max_layer; ++i) {
      const std::size_t chi = chromatic_number_exact(g.induced(layers[i]));
      report.entries.push_back({root, i, layers[i].size(), chi});
      report.max_layer_chromatic = std::max(report.max_layer_chromatic, chi);
      if (chi > report.bound) report.pass = false;
    }
  }
  return report;
}

}  // namespace thetalab
