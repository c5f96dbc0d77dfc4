#pragma once

// Orthonormal representations f: V(G) -> R^d (unit vectors, orthogonal on
// non-adjacent pairs), their Gram matrices, and the trace inequalities that
// bound minimum semidefinite rank and theta of the complement.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "thetalab/constructions.hpp"
#include "thetalab/error.hpp"
#include "thetalab/freeness.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/linalg.hpp"

namespace thetalab {

inline constexpr double kRepTolerance = 1e-8;

class OrthoRep {
 public:
  OrthoRep() = default;
  /// vectors[v] is f(v); every vector must have length d.
  OrthoRep(Graph target, std::size_t d, std::vector<std::vector<double>> vectors)
      : target_(std::move(target)), d_(d), vectors_(std::move(vectors)) {
    if (vectors_.size() != target_.n()) {
      throw Error(ErrorKind::kDimensionMismatch, "one vector per vertex required");
    }
    for (const auto& f : vectors_) {
      if (f.size() != d_) throw Error(ErrorKind::kDimensionMismatch, "vector length differs from d");
    }
  }

  std::size_t d() const noexcept { return d_; }
  std::size_t n() const noexcept { return vectors_.size(); }
  const Graph& target() const noexcept { return target_; }
  const std::vector<double>& operator[](Vertex v) const noexcept { return vectors_[v]; }
  const std::vector<std::vector<double>>& vectors() const noexcept { return vectors_; }

 private:
  Graph target_;
  std::size_t d_ = 0;
  std::vector<std::vector<double>> vectors_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct RepValidation {
  bool valid = false;
  double max_residual = 0.0;        // worst of the two below
  double norm_residual = 0.0;       // max_v | ||f(v)|| - 1 |
  double orthogonality_residual = 0.0;  // max over non-adjacent u != v of |<f(u), f(v)>|
};

/// Checks unit norms and orthogonality of every non-adjacent pair of g.
inline RepValidation validate_rep(const OrthoRep& rep, const Graph& g, double tol = kRepTolerance) {
  if (rep.n() != g.n()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "representation has " + std::to_string(rep.n()) + " vectors for " + std::to_string(g.n()) +
                    " vertices");
  }
  RepValidation out;
  for (Vertex u = 0; u < g.n(); ++u) {
    out.norm_residual = std::max(out.norm_residual, std::abs(std::sqrt(dot(rep[u], rep[u])) - 1.0));
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) {
        out.orthogonality_residual = std::max(out.orthogonality_residual, std::abs(dot(rep[u], rep[v])));
      }
    }
  }
  out.max_residual = std::max(out.norm_residual, out.orthogonality_residual);
  out.valid = out.max_residual <= tol;
  return out;
}

inline RepValidation validate_rep(const OrthoRep& rep, double tol = kRepTolerance) {
  return validate_rep(rep, rep.target(), tol);
}

inline SymMatrix gram(const OrthoRep& rep) {
  SymMatrix m(rep.n());
  for (Vertex u = 0; u < rep.n(); ++u) {
    for (Vertex v = u; v < rep.n(); ++v) m.set(u, v, dot(rep[u], rep[v]));
  }
  return m;
}

/// Vertex in part i gets e_i in R^{#parts}. Throws NotACliqueCover.
inline OrthoRep basis_rep_from_clique_cover(const Graph& g, const std::vector<std::vector<Vertex>>& cover) {
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (Vertex v : cover[i]) {
      if (v >= g.n() || part_of[v] != -1) {
        throw Error(ErrorKind::kNotACliqueCover, "parts must partition the vertex set");
      }
      part_of[v] = static_cast<int>(i);
    }
    for (std::size_t a = 0; a < cover[i].size(); ++a) {
      for (std::size_t b = a + 1; b < cover[i].size(); ++b) {
        if (!g.adjacent(cover[i][a], cover[i][b])) {
          throw Error(ErrorKind::kNotACliqueCover, "part " + std::to_string(i) + " is not a clique");
        }
      }
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (part_of[v] == -1) throw Error(ErrorKind::kNotACliqueCover, "vertex " + std::to_string(v) + " uncovered");
  }
  const std::size_t d = cover.size();
  std::vector<std::vector<double>> vectors(g.n(), std::vector<double>(d, 0.0));
  for (Vertex v = 0; v < g.n(); ++v) vectors[v][static_cast<std::size_t>(part_of[v])] = 1.0;
  return OrthoRep(g, d, std::move(vectors));
}

namespace detail {

inline std::vector<double> random_unit(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(d);
  double norm = 0.0;
  while (norm < 1e-8) {
    for (auto& c : x) c = gauss(rng);
    norm = std::sqrt(dot(x, x));
  }
  for (auto& c : x) c /= norm;
  return x;
}

// Columns of a random orthogonal matrix (Gram-Schmidt applied twice).
inline std::vector<std::vector<double>> random_orthonormal_basis(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<double>> basis;
  while (basis.size() < n) {
    std::vector<double> v = random_unit(n, rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double c = dot(v, b);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * b[i];
      }
    }
    const double norm = std::sqrt(dot(v, v));
    if (norm < 1e-6) continue;
    for (auto& c : v) c /= norm;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Greedy clique cover in a seeded vertex order; each clique gets a private block
/// of a random orthonormal basis of R^n and its vertices get random unit vectors
/// inside that block.
inline OrthoRep random_rep(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.n();
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<Vertex>> cliques;
  std::vector<bool> covered(n, false);
  for (Vertex v : order) {
    if (covered[v]) continue;
    std::vector<Vertex> clique{v};
    covered[v] = true;
    for (Vertex w : order) {
      if (covered[w]) continue;
      bool joins = true;
      for (Vertex c : clique) joins = joins && g.adjacent(c, w);
      if (joins) {
        clique.push_back(w);
        covered[w] = true;
      }
    }
    cliques.push_back(std::move(clique));
  }

  const auto basis = detail::random_orthonormal_basis(n, rng);
  std::vector<std::vector<double>> vectors(n, std::vector<double>(n, 0.0));
  std::size_t offset = 0;
  for (const auto& clique : cliques) {
    const std::size_t s = clique.size();
    for (Vertex v : clique) {
      const auto coeffs = detail::random_unit(s, rng);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t r = 0; r < n; ++r) vectors[v][r] += coeffs[i] * basis[offset + i][r];
      }
    }
    offset += s;
  }
  return OrthoRep(g, n, std::move(vectors));
}

/// Uniformly random unit vector in R^d.
inline std::vector<double> random_handle(std::size_t d, std::mt19937_64& rng) { return detail::random_unit(d, rng); }

/// Lovasz umbrella in R^3: f(k) at angle k * step around the axis e_3 with
/// <e_3, f(k)>^2 = 5^{-1/2}. step = 2 pi/5 represents C5 (edges k, k+1);
/// step = 4 pi/5 represents its complement (edges k, k+2).
inline OrthoRep umbrella_rep(bool complement_labelling = false) {
  const double axis2 = 1.0 / std::sqrt(5.0);
  const double axis = std::sqrt(axis2);
  const double radial = std::sqrt(1.0 - axis2);
  const double step = (complement_labelling ? 4.0 : 2.0) * std::numbers::pi / 5.0;
  std::vector<std::vector<double>> vectors;
  for (int k = 0; k < 5; ++k) {
    vectors.push_back({radial * std::cos(step * k), radial * std::sin(step * k), axis});
  }
  Graph target = complement_labelling ? complement(make_cycle(5)) : make_cycle(5);
  return OrthoRep(std::move(target), 3, std::move(vectors));
}

inline std::vector<double> umbrella_axis() { return {0.0, 0.0, 1.0}; }

struct SchnirelmannReport {
  bool pass = false;
  double trace = 0.0;
  double trace_sq = 0.0;  // tr(M^2)
  std::size_t rank = 0;
  double lhs = 0.0;       // tr(M)^2
  double rhs = 0.0;       // rank * tr(M^2)
  double slack = 0.0;     // rhs - lhs
};

/// tr(M)^2 <= rank(M) tr(M^2), with rank from numeric_rank and a 1e-6 relative allowance.
inline SchnirelmannReport schnirelmann_check(const SymMatrix& m) {
  SchnirelmannReport r;
  r.trace = m.trace();
  r.trace_sq = m.inner(m);
  r.rank = numeric_rank(m);
  r.lhs = r.trace * r.trace;
  r.rhs = static_cast<double>(r.rank) * r.trace_sq;
  r.slack = r.rhs - r.lhs;
  r.pass = r.lhs <= r.rhs + 1e-6 * std::max(1.0, r.rhs);
  return r;
}

struct MsrUpperCertificate {
  Graph graph;
  OrthoRep rep;
  std::size_t clique_size = 0;
  std::size_t dimension = 0;  // ceil(n / clique_size)
  bool pattern_free = false;
  bool rep_valid = false;
};

/// Disjoint cliques of size |H| - 1 with the basis representation; H must be a
/// cycle (C_k, k >= 3) or a clique (K_k, k >= 2).
inline MsrUpperCertificate msr_upper_certificate(std::size_t n, const Pattern& forbidden) {
  if (forbidden.kind == Pattern::Kind::kCompleteBipartite ||
      (forbidden.kind == Pattern::Kind::kCycle && forbidden.size < 3) ||
      (forbidden.kind == Pattern::Kind::kClique && forbidden.size < 2)) {
    throw Error(ErrorKind::kUnsupportedPattern, "no clique-union certificate for " + forbidden.name());
  }
  MsrUpperCertificate cert;
  cert.clique_size = forbidden.size - 1;
  cert.graph = clique_union(n, cert.clique_size);
  cert.rep = basis_rep_from_clique_cover(cert.graph, clique_union_parts(n, cert.clique_size));
  cert.dimension = cert.rep.d();
  cert.pattern_free = !contains_pattern(cert.graph, forbidden);
  cert.rep_valid = validate_rep(cert.rep, cert.graph).valid;
  return cert;
}

struct MsrChainReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t t = 0;
  double trace = 0.0;
  double trace_sq = 0.0;     // tr(M^2)
  double trace_sq_bound = 0.0;  // n t
  bool trace_sq_ok = false;     // tr(M^2) <= n t
  double chain_lhs = 0.0;    // n^2 = tr(M)^2
  double chain_rhs = 0.0;    // d tr(M^2)
  bool chain_ok = false;     // n^2 <= d tr(M^2)
  bool pass = false;
};

/// Per-step inequalities of the rank lower bound for graphs free of a
/// tree-plus-vertex pattern with tree size t.
inline MsrChainReport msr_lower_chain_check(const OrthoRep& rep, const Graph& g, std::size_t t,
                                            double tol = 1e-9) {
  const auto validation = validate_rep(rep, g);
  if (!validation.valid) {
    throw Error(ErrorKind::kRepInvalid, "representation residual " + std::to_string(validation.max_residual));
  }
  const SymMatrix m = gram(rep);
  MsrChainReport r;
  r.n = g.n();
  r.d = rep.d();
  r.t = t;
  r.trace = m.trace();
  r.trace_sq = m.inner(m);
  r.trace_sq_bound = static_cast<double>(r.n * t);
  r.trace_sq_ok = r.trace_sq <= r.trace_sq_bound + tol * std::max(1.0, r.trace_sq_bound);
  r.chain_lhs = static_cast<double>(r.n) * static_cast<double>(r.n);
  r.chain_rhs = static_cast<double>(r.d) * r.trace_sq;
  r.chain_ok = r.chain_lhs <= r.chain_rhs * (1.0 + tol);
  r.pass = r.trace_sq_ok && r.chain_ok;
  return r;
}

enum class Parity { kOdd, kEven };

struct TracePowerReport {
  Parity parity = Parity::kOdd;
  std::size_t t = 0;
  unsigned exponent = 0;      // 2t+1 or 2t
  double trace_power = 0.0;   // tr(M^exponent)
  double bound = 0.0;         // (6t)^{2t} n or (12t)^{2t} n
  bool trace_ok = false;
  double lambda_max = 0.0;
  double lambda_bound = 0.0;  // bound^{1/exponent}
  bool lambda_ok = false;
  bool pass = false;
};

/// Trace-power certificate for graphs without a cycle of length exactly 2t+1 (odd)
/// or 2t (even). Throws PreconditionViolated if the graph has such a cycle.
inline TracePowerReport trace_power_certificate(const OrthoRep& rep, const Graph& g, std::size_t t, Parity parity) {
  if (t < 1 || (parity == Parity::kEven && t < 2)) {
    throw Error(ErrorKind::kPreconditionViolated, "t must be >= 1 (odd) or >= 2 (even)");
  }
  const unsigned exponent = static_cast<unsigned>(parity == Parity::kOdd ? 2 * t + 1 : 2 * t);
  if (contains_cycle(g, exponent)) {
    throw Error(ErrorKind::kPreconditionViolated, "graph contains a cycle of length " + std::to_string(exponent));
  }
  const auto validation = validate_rep(rep, g);
  if (!validation.valid) {
    throw Error(ErrorKind::kPreconditionViolated,
                "representation residual " + std::to_string(validation.max_residual));
  }
  const SymMatrix m = gram(rep);
  const auto eigenvalues = eigen_sym(m, false).eigenvalues;

  TracePowerReport r;
  r.parity = parity;
  r.t = t;
  r.exponent = exponent;
  for (double lam : eigenvalues) r.trace_power += std::pow(lam, static_cast<double>(exponent));
  const double base = (parity == Parity::kOdd ? 6.0 : 12.0) * static_cast<double>(t);
  r.bound = std::pow(base, 2.0 * static_cast<double>(t)) * static_cast<double>(g.n());
  r.trace_ok = r.trace_power <= r.bound * (1.0 + 1e-12);
  r.lambda_max = eigenvalues.front();
  r.lambda_bound = std::pow(r.bound, 1.0 / exponent);
  r.lambda_ok = r.lambda_max <= r.lambda_bound * (1.0 + 1e-12);
  r.pass = r.trace_ok && r.lambda_ok;
  return r;
}

struct SumLength {
  double raw = 0.0;                     // || sum_v f(v) ||
  double via_gram = 0.0;                // sqrt(1^T M 1)
  std::optional<double> aligned;        // after flipping f(v) so that <x, f(v)> >= 0
};

inline SumLength rep_sum_length(const OrthoRep& rep, const std::optional<std::vector<double>>& handle = std::nullopt) {
  SumLength out;
  std::vector<double> total(rep.d(), 0.0);
  for (Vertex v = 0; v < rep.n(); ++v) {
    for (std::size_t i = 0; i < rep.d(); ++i) total[i] += rep[v][i];
  }
  out.raw = std::sqrt(dot(total, total));
  out.via_gram = std::sqrt(std::max(0.0, gram(rep).sum()));
  if (handle) {
    if (handle->size() != rep.d()) throw Error(ErrorKind::kDimensionMismatch, "handle dimension");
    std::fill(total.begin(), total.end(), 0.0);
    for (Vertex v = 0; v < rep.n(); ++v) {
      const double sign = dot(*handle, rep[v]) < 0.0 ? -1.0 : 1.0;
      for (std::size_t i = 0; i < rep.d(); ++i) total[i] += sign * rep[v][i];
    }
    out.aligned = std::sqrt(dot(total, total));
  }
  return out;
}

}  // namespace thetalab
