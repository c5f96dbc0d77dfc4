#pragma once

// Explicit extremal graph families over finite fields: the K_{2,t+1}-free
// scaling-class graph, the projective-plane polarity graph, and disjoint
// clique unions. The field graphs come with their loop-included incidence
// so the algebraic identities can be checked before loops are dropped.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/ffield.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/linalg.hpp"

namespace thetalab {

/// Square integer matrix for exact identities.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t n() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  IntMatrix squared() const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        const std::int64_t a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * (*this)(k, j);
      }
    }
    return out;
  }

  SymMatrix to_sym() const {
    SymMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) m.set(i, j, static_cast<double>((*this)(i, j)));
    }
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// A field graph before and after loop removal.
struct LoopedGraph {
  Graph graph;                // simple graph, loops removed
  IntMatrix loop_adjacency;   // 0/1 incidence including the diagonal loops
  std::vector<bool> has_loop;

  std::size_t loop_count() const {
    std::size_t c = 0;
    for (bool b : has_loop) c += b ? 1 : 0;
    return c;
  }
  /// Row sums of the loop-included incidence.
  std::vector<std::int64_t> loop_degrees() const {
    std::vector<std::int64_t> out(loop_adjacency.n(), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < out.size(); ++j) out[i] += loop_adjacency(i, j);
    }
    return out;
  }
};

namespace detail {

inline LoopedGraph finish_looped(IntMatrix incidence, std::vector<std::string> labels) {
  const std::size_t n = incidence.n();
  std::vector<Edge> edges;
  std::vector<bool> loops(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    loops[i] = incidence(i, i) != 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (incidence(i, j) != 0) edges.emplace_back(i, j);
    }
  }
  return LoopedGraph{Graph::from_edges(n, edges, std::move(labels)), std::move(incidence), std::move(loops)};
}

}  // namespace detail

struct FurediGraph : LoopedGraph {
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  // canonical class representatives <a,b> as field-element indices
  std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;
  std::vector<std::uint64_t> subgroup;  // indices of {1, h, ..., h^(t-1)}
};

/// Vertices: classes of (F x F) \ {(0,0)} under scaling by the order-t subgroup H;
/// <a,b> ~ <a',b'> iff aa' + bb' lies in H. Throws OrderUnavailable unless t | q-1.
inline FurediGraph furedi_graph(std::uint64_t q, std::uint64_t t) {
  const FieldSpec field = FieldSpec::from_order(q);
  if (t < 1 || (q - 1) % t != 0) {
    throw Error(ErrorKind::kOrderUnavailable,
                std::to_string(t) + " does not divide q-1 = " + std::to_string(q - 1));
  }
  const auto group = field.subgroup(t);
  std::vector<bool> in_group(q, false);
  FurediGraph fg;
  fg.q = q;
  fg.t = t;
  for (const auto& h : group) {
    in_group[field.index(h)] = true;
    fg.subgroup.push_back(field.index(h));
  }

  // Lexicographic scan: the first unseen pair of each class is its smallest member.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(q * q, kUnassigned);
  const auto elements = field.elements();
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      if ((a == 0 && b == 0) || class_of[a * q + b] != kUnassigned) continue;
      const std::size_t id = fg.classes.size();
      fg.classes.emplace_back(a, b);
      for (const auto& c : group) {
        const auto ca = field.index(field.mul(c, elements[a]));
        const auto cb = field.index(field.mul(c, elements[b]));
        class_of[ca * q + cb] = id;
      }
    }
  }

  const std::size_t n = fg.classes.size();
  IntMatrix incidence(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [a, b] = fg.classes[i];
    labels.push_back("<" + std::to_string(a) + "," + std::to_string(b) + ">");
    for (std::size_t j = i; j < n; ++j) {
      const auto& [c, d] = fg.classes[j];
      const auto dot = field.add(field.mul(elements[a], elements[c]), field.mul(elements[b], elements[d]));
      if (in_group[field.index(dot)]) incidence(i, j) = incidence(j, i) = 1;
    }
  }
  static_cast<LoopedGraph&>(fg) = detail::finish_looped(std::move(incidence), std::move(labels));
  return fg;
}

struct SquareIdentityReport {
  bool identity_holds = false;       // A^2 == (q - t) I + t J - t Q entrywise
  bool q_rows_hold = false;          // every row of Q has (q-1-t)/t ones
  std::int64_t expected_q_row_sum = 0;
  std::vector<std::int64_t> q_row_sums;
  IntMatrix residual;                // A^2 - ((q - t) I + t J - t Q)
  IntMatrix q_matrix;
  std::int64_t max_abs_residual = 0;
  bool common_neighbors_zero_or_t = false;  // off-diagonal A^2 entries in {0, t}
};

/// Exact integer check of the square identity on the loop-included incidence.
inline SquareIdentityReport furedi_square_identity(const FurediGraph& fg) {
  const std::size_t n = fg.loop_adjacency.n();
  const auto q = static_cast<std::int64_t>(fg.q);
  const auto t = static_cast<std::int64_t>(fg.t);
  const IntMatrix a2 = fg.loop_adjacency.squared();

  SquareIdentityReport report;
  report.q_matrix = IntMatrix(n);
  report.residual = IntMatrix(n);
  report.expected_q_row_sum = (q - 1 - t) / t;
  report.q_row_sums.assign(n, 0);
  report.common_neighbors_zero_or_t = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && a2(i, j) == 0) {
        report.q_matrix(i, j) = 1;
        ++report.q_row_sums[i];
      }
      if (i != j && a2(i, j) != 0 && a2(i, j) != t) report.common_neighbors_zero_or_t = false;
      const std::int64_t rhs = (i == j ? q - t : 0) + t - t * report.q_matrix(i, j);
      report.residual(i, j) = a2(i, j) - rhs;
      report.max_abs_residual = std::max(report.max_abs_residual, std::abs(report.residual(i, j)));
    }
  }
  report.identity_holds = report.max_abs_residual == 0;
  report.q_rows_hold = std::all_of(report.q_row_sums.begin(), report.q_row_sums.end(),
                                   [&](std::int64_t s) { return s == report.expected_q_row_sum; });
  return report;
}

struct PolarityGraph : LoopedGraph {
  std::uint64_t q = 0;
  std::vector<std::array<std::uint64_t, 3>> points;  // homogeneous coordinates, first nonzero = 1
};

/// Points of PG(2, q); u ~ v iff u . v = 0. Absolute points lose their loops.
inline PolarityGraph polarity_graph(std::uint64_t q) {
  const FieldSpec field = FieldSpec::from_order(q);
  const auto elements = field.elements();
  PolarityGraph pg;
  pg.q = q;
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      for (std::uint64_t z = 0; z < q; ++z) {
        const std::uint64_t first = x != 0 ? x : (y != 0 ? y : z);
        if (first == 1) pg.points.push_back({x, y, z});
      }
    }
  }
  const std::size_t n = pg.points.size();
  IntMatrix incidence(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = pg.points[i];
    labels.push_back("(" + std::to_string(u[0]) + ":" + std::to_string(u[1]) + ":" + std::to_string(u[2]) + ")");
    for (std::size_t j = i; j < n; ++j) {
      const auto& v = pg.points[j];
      FieldElement dot = field.zero();
      for (std::size_t c = 0; c < 3; ++c) dot = field.add(dot, field.mul(elements[u[c]], elements[v[c]]));
      if (field.is_zero(dot)) incidence(i, j) = incidence(j, i) = 1;
    }
  }
  static_cast<LoopedGraph&>(pg) = detail::finish_looped(std::move(incidence), std::move(labels));
  return pg;
}

/// ceil(n/t) consecutive blocks; all of size t except possibly the last.
inline std::vector<std::vector<Vertex>> clique_union_parts(std::size_t n, std::size_t t) {
  if (n < 1 || t < 1) throw Error(ErrorKind::kPreconditionViolated, "clique_union needs n, t >= 1");
  std::vector<std::vector<Vertex>> parts;
  for (Vertex start = 0; start < n; start += t) {
    std::vector<Vertex> part;
    for (Vertex v = start; v < std::min(n, start + t); ++v) part.push_back(v);
    parts.push_back(std::move(part));
  }
  return parts;
}

inline Graph clique_union(std::size_t n, std::size_t t) {
  std::vector<Edge> edges;
  for (const auto& part : clique_union_parts(n, t)) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) edges.emplace_back(part[i], part[j]);
    }
  }
  return Graph::from_edges(n, edges);
}

/// max_{i >= 2} |lambda_i| for a descending spectrum.
inline double nontrivial_spectral_radius(const std::vector<double>& eigenvalues) {
  double r = 0.0;
  for (std::size_t i = 1; i < eigenvalues.size(); ++i) r = std::max(r, std::abs(eigenvalues[i]));
  return r;
}

}  // namespace thetalab
