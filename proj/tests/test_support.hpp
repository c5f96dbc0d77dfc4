#pragma once

// Generators and brute-force oracles shared by the unit tests. Nothing here
// calls the search code it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "thetalab/graph.hpp"

namespace thetalab::testing {

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Graph on n vertices whose edges are the set bits of `mask` over pairs (u<v) in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Every k-subset, every cyclic order with a fixed first vertex.
inline bool brute_force_has_cycle(const Graph& g, std::size_t k) {
  const std::size_t n = g.n();
  if (k < 3 || k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Vertex> sub;
    for (Vertex v = 0; v < n; ++v) {
      if (pick[v]) sub.push_back(v);
    }
    do {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = g.adjacent(sub[i], sub[(i + 1) % k]);
      if (ok) return true;
    } while (std::next_permutation(sub.begin() + 1, sub.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

/// Smallest k admitting a proper colouring, by enumerating all k^n assignments.
inline std::size_t brute_force_chromatic(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return 0;
  const auto edges = g.edges();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> col(n, 0);
    while (true) {
      bool proper = std::all_of(edges.begin(), edges.end(),
                                [&](const Edge& e) { return col[e.first] != col[e.second]; });
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

inline std::size_t brute_force_independence(const Graph& g) {
  const std::size_t n = g.n();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (Vertex u = 0; u < n && independent; ++u) {
      if (!((mask >> u) & 1U)) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (((mask >> v) & 1U) && g.adjacent(u, v)) {
          independent = false;
          break;
        }
      }
    }
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

}  // namespace thetalab::testing
