#pragma once

// Exact pattern-freeness checkers for cycles, complete bipartite graphs and
// cliques. None of these are heuristic: `false` means the pattern is absent.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"

namespace thetalab {

namespace detail {

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source, const VertexSet& allowed) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.n(), kInf);
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex u = frontier[head];
    for (Vertex w : (g.neighbors(u) & allowed).members()) {
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t k) : g_(g), k_(k) {}

  bool run() {
    const std::size_t n = g_.n();
    for (Vertex s = 0; s + k_ <= n; ++s) {
      // s is the smallest vertex on the cycle
      allowed_ = VertexSet(n);
      for (Vertex v = s; v < n; ++v) allowed_.insert(v);
      dist_ = bfs_distances(g_, s, allowed_);
      start_ = s;
      path_.assign(1, s);
      on_path_ = VertexSet(n);
      on_path_.insert(s);
      if (extend()) return true;
    }
    return false;
  }

 private:
  bool extend() {
    const Vertex cur = path_.back();
    const std::size_t len = path_.size();
    if (len == k_) {
      // each cycle is seen twice; keep the orientation with path_[1] < last
      return g_.adjacent(cur, start_) && path_[1] < cur;
    }
    VertexSet next = g_.neighbors(cur) & allowed_;
    next.subtract(on_path_);
    for (Vertex w : next.members()) {
      // after stepping to w, k - len edges must lead back to start
      if (dist_[w] > k_ - len) continue;
      path_.push_back(w);
      on_path_.insert(w);
      if (extend()) return true;
      on_path_.erase(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  Vertex start_ = 0;
  VertexSet allowed_;
  VertexSet on_path_;
  std::vector<std::size_t> dist_;
  std::vector<Vertex> path_;
};

inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// Greedy sequential colouring of `cand`; returns vertices ordered by colour
// with the colour number (1-based) of each, as used for clique bounds.
inline void color_sort(const Graph& g, const VertexSet& cand, std::vector<Vertex>& order,
                       std::vector<std::size_t>& colors) {
  order.clear();
  colors.clear();
  VertexSet uncolored = cand;
  std::size_t color = 0;
  while (!uncolored.empty()) {
    ++color;
    VertexSet avail = uncolored;
    while (!avail.empty()) {
      const Vertex v = avail.members().front();
      avail.erase(v);
      avail.subtract(g.neighbors(v));
      uncolored.erase(v);
      order.push_back(v);
      colors.push_back(color);
    }
  }
}

// Branch and bound for a clique of size `target` (or the maximum when
// target is 0). Returns the best size found.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t target)
      : g_(g), target_(target), best_(target == 0 ? 0 : target - 1) {}

  std::size_t run() {
    expand(VertexSet::full(g_.n()), 0);
    return best_;
  }

 private:
  bool expand(VertexSet cand, std::size_t depth) {
    std::vector<Vertex> order;
    std::vector<std::size_t> colors;
    color_sort(g_, cand, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colors[i] <= best_) return false;
      const Vertex v = order[i];
      const std::size_t size = depth + 1;
      if (size > best_) {
        best_ = size;
        if (target_ != 0 && best_ >= target_) return true;
      }
      VertexSet next = cand & g_.neighbors(v);
      if (!next.empty() && expand(next, size)) return true;
      cand.erase(v);
    }
    return false;
  }

  const Graph& g_;
  std::size_t target_;
  std::size_t best_;
};

}  // namespace detail

/// True iff g has a cycle of length exactly k as a (not necessarily induced) subgraph.
inline bool contains_cycle(const Graph& g, std::size_t k) {
  if (k < 3 || k > g.n()) return false;
  return detail::CycleSearch(g, k).run();
}

inline constexpr double kDefaultSubsetCap = 1e7;

/// True iff some min(t,s)-subset has at least max(t,s) common neighbours, i.e. K_{t,s} is a subgraph.
inline bool contains_complete_bipartite(const Graph& g, std::size_t t, std::size_t s,
                                        double subset_cap = kDefaultSubsetCap) {
  if (t < 1 || s < 1) throw Error(ErrorKind::kPreconditionViolated, "K_{t,s} needs t, s >= 1");
  const std::size_t small = std::min(t, s);
  const std::size_t large = std::max(t, s);
  const std::size_t n = g.n();
  if (small + large > n) return false;
  if (detail::binomial(n, small) > subset_cap) {
    throw Error(ErrorKind::kComplexityRefused,
                "C(" + std::to_string(n) + "," + std::to_string(small) + ") exceeds subset cap");
  }
  // Depth-first over increasing subsets; the running common neighbourhood
  // already excludes subset members because the graph has no loops.
  std::vector<VertexSet> common(small + 1);
  common[0] = VertexSet::full(n);
  auto recurse = [&](auto&& self, Vertex from, std::size_t depth) -> bool {
    if (depth == small) return common[depth].size() >= large;
    for (Vertex v = from; v + (small - depth) <= n; ++v) {
      common[depth + 1] = common[depth] & g.neighbors(v);
      if (common[depth + 1].size() < large) continue;
      if (self(self, v + 1, depth + 1)) return true;
    }
    return false;
  };
  return recurse(recurse, 0, 0);
}

inline bool contains_clique(const Graph& g, std::size_t t) {
  if (t == 0) return true;
  if (t > g.n()) return false;
  if (t == 1) return true;
  return detail::CliqueSearch(g, t).run() >= t;
}

inline std::size_t clique_number(const Graph& g) {
  if (g.n() == 0) return 0;
  return detail::CliqueSearch(g, 0).run();
}

inline std::size_t independence_number(const Graph& g) { return clique_number(complement(g)); }

/// Forbidden patterns with an exact checker: C_k, K_k and K_{s,t}.
struct Pattern {
  enum class Kind { kCycle, kClique, kCompleteBipartite };
  Kind kind = Kind::kCycle;
  std::size_t size = 3;
  std::size_t other = 0;  // second side of K_{s,t}

  static Pattern cycle(std::size_t k) { return {Kind::kCycle, k, 0}; }
  static Pattern clique(std::size_t k) { return {Kind::kClique, k, 0}; }
  static Pattern complete_bipartite(std::size_t s, std::size_t t) { return {Kind::kCompleteBipartite, s, t}; }

  std::string name() const {
    switch (kind) {
      case Kind::kCycle: return "C" + std::to_string(size);
      case Kind::kClique: return "K" + std::to_string(size);
      case Kind::kCompleteBipartite: return "K" + std::to_string(size) + "," + std::to_string(other);
    }
    return "?";
  }

  /// Parses "C4", "K3" or "K2,3".
  static Pattern parse(const std::string& text) {
    auto number = [&](const std::string& digits) -> std::size_t {
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::kUnsupportedPattern, "cannot parse pattern '" + text + "'");
      }
      return static_cast<std::size_t>(std::stoul(digits));
    };
    if (text.size() < 2) throw Error(ErrorKind::kUnsupportedPattern, "cannot parse pattern '" + text + "'");
    const char head = text[0];
    const std::string rest = text.substr(1);
    if (head == 'C' || head == 'c') {
      const auto k = number(rest);
      if (k < 3) throw Error(ErrorKind::kUnsupportedPattern, "cycles need length >= 3");
      return cycle(k);
    }
    if (head == 'K' || head == 'k') {
      const auto comma = rest.find(',');
      if (comma == std::string::npos) {
        const auto k = number(rest);
        if (k < 1) throw Error(ErrorKind::kUnsupportedPattern, "cliques need size >= 1");
        return clique(k);
      }
      const auto s = number(rest.substr(0, comma));
      const auto t = number(rest.substr(comma + 1));
      if (s < 1 || t < 1) throw Error(ErrorKind::kUnsupportedPattern, "K_{s,t} needs s, t >= 1");
      return complete_bipartite(s, t);
    }
    throw Error(ErrorKind::kUnsupportedPattern, "cannot parse pattern '" + text + "'");
  }
};

inline bool contains_pattern(const Graph& g, const Pattern& h, double subset_cap = kDefaultSubsetCap) {
  switch (h.kind) {
    case Pattern::Kind::kCycle: return contains_cycle(g, h.size);
    case Pattern::Kind::kClique: return contains_clique(g, h.size);
    case Pattern::Kind::kCompleteBipartite: return contains_complete_bipartite(g, h.size, h.other, subset_cap);
  }
  return false;
}

}  // namespace thetalab
