#pragma once

// Certified Lovasz theta. The solver runs a primal-dual interior point method
// on
//   max <J, X>  s.t.  tr X = 1,  X_ij = 0 (ij in E),  X psd
//   min y       s.t.  y I - B psd,  B = 1 off the edges, free on the edges
// and then turns its iterates into checkable certificates: a feasible X gives
// lower = <J, X> and a patterned B gives upper = lambda_max(B).

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/freeness.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/linalg.hpp"
#include "thetalab/ortho.hpp"

namespace thetalab {

inline constexpr std::size_t kDefaultSolverCap = 200;
inline constexpr std::size_t kMaxSolverConstraints = 2500;

/// Largest n accepted by theta_sdp; LAB_MAX_N overrides the default.
inline std::size_t solver_cap() {
  if (const char* env = std::getenv("LAB_MAX_N")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSolverCap;
}

struct ThetaOptions {
  double tol = 1e-7;
  std::size_t max_iterations = 200;
};

struct ThetaResult {
  double lower = 0.0;
  double upper = 0.0;
  double gap = 0.0;
  SymMatrix primal_X;  // psd, trace 1, zero on edges
  SymMatrix dual_B;    // ones on the diagonal and non-edges
  std::size_t iterations = 0;
  bool gap_reached = false;
  double primal_residual = 0.0;

  double value() const noexcept { return 0.5 * (lower + upper); }
};

/// max(|tr X - 1|, max_edges |X_ij|, -lambda_min(X)).
inline double primal_residual(const Graph& g, const SymMatrix& x) {
  double r = std::abs(x.trace() - 1.0);
  for (const auto& [u, v] : g.edges()) r = std::max(r, std::abs(x(u, v)));
  return std::max(r, -lambda_min(x));
}

inline bool dual_pattern_exact(const Graph& g, const SymMatrix& b) {
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j = i; j < g.n(); ++j) {
      if ((i == j || !g.adjacent(i, j)) && b(i, j) != 1.0) return false;
    }
  }
  return true;
}

namespace detail {

struct PrimalCertificate {
  SymMatrix x;
  double value = 0.0;
};

// Zero the edge entries, shift by the identity if needed and renormalize the trace.
inline PrimalCertificate primal_certificate(const Graph& g, const Matrix& x) {
  const std::size_t n = g.n();
  SymMatrix cert = SymMatrix::from_dense(x);
  for (const auto& [u, v] : g.edges()) cert.set(u, v, 0.0);
  const double shift = std::max(0.0, -lambda_min(cert));
  for (Vertex i = 0; i < n; ++i) cert.add(i, i, shift);
  const double trace = cert.trace();
  SymMatrix scaled(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i; j < n; ++j) scaled.set(i, j, cert(i, j) / trace);
  }
  return {scaled, scaled.sum()};
}

struct DualCertificate {
  SymMatrix b;
  double value = 0.0;
};

inline DualCertificate dual_certificate(const Graph& g, const std::vector<Edge>& edges, const std::vector<double>& y) {
  SymMatrix b = SymMatrix::ones(g.n());
  for (std::size_t e = 0; e < edges.size(); ++e) b.set(edges[e].first, edges[e].second, 1.0 - y[e + 1]);
  const double value = lambda_max(b);
  return {std::move(b), value};
}

// Z = y_0 I + sum_e y_e (E_ij + E_ji) - J
inline Matrix dual_slack(std::size_t n, const std::vector<Edge>& edges, const std::vector<double>& y) {
  Matrix z(n, n, -1.0);
  for (std::size_t i = 0; i < n; ++i) z(i, i) += y[0];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    z(i, j) += y[e + 1];
    z(j, i) += y[e + 1];
  }
  return z;
}

// Largest step in (0, 1] keeping base + alpha dir positive definite: halve by
// 0.8 until Cholesky succeeds, then back off by 0.95.
inline double step_length(const Matrix& base, const Matrix& dir) {
  double alpha = 1.0;
  for (int tries = 0; tries < 200; ++tries) {
    if (cholesky(base + alpha * dir)) break;
    alpha *= 0.8;
  }
  return alpha < 1.0 ? 0.95 * alpha : alpha;
}

}  // namespace detail

/// Certified bracket on theta(g). The result is always returned with valid
/// certificates; gap_reached says whether upper - lower <= tol.
inline ThetaResult theta_sdp(const Graph& g, const ThetaOptions& options = {}) {
  const std::size_t n = g.n();
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "graph has no vertices");
  if (n > solver_cap()) {
    throw Error(ErrorKind::kComplexityRefused,
                "n = " + std::to_string(n) + " exceeds the solver cap " + std::to_string(solver_cap()));
  }
  if (!(options.tol >= 1e-8)) throw Error(ErrorKind::kPreconditionViolated, "tol must be >= 1e-8");
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size() + 1;
  if (m > kMaxSolverConstraints) {
    throw Error(ErrorKind::kComplexityRefused, std::to_string(edges.size()) + " edges exceed the solver budget");
  }

  Matrix x = Matrix::identity(n);
  x *= 1.0 / static_cast<double>(n);
  std::vector<double> y(m, 0.0);
  y[0] = static_cast<double>(n) + 1.0;
  Matrix z = detail::dual_slack(n, edges, y);

  ThetaResult result;
  result.lower = -1.0;
  result.upper = std::numeric_limits<double>::infinity();
  auto improve = [&]() {
    auto primal = detail::primal_certificate(g, x);
    if (primal.value > result.lower) {
      result.lower = primal.value;
      result.primal_X = std::move(primal.x);
    }
    auto dual = detail::dual_certificate(g, edges, y);
    if (dual.value < result.upper) {
      result.upper = dual.value;
      result.dual_B = std::move(dual.b);
    }
    result.gap = result.upper - result.lower;
    return result.gap <= options.tol;
  };

  auto inner = [n](const Matrix& a, const Matrix& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * b(i, j);
    }
    return s;
  };
  double mu = inner(z, x) / (2.0 * static_cast<double>(n));

  result.gap_reached = improve();
  while (!result.gap_reached && result.iterations < options.max_iterations) {
    ++result.iterations;
    const auto zi_opt = spd_inverse(z);
    if (!zi_opt) break;
    const Matrix& zi = *zi_opt;
    const Matrix zix = zi * x;

    // Schur complement M_ab = tr(A_a Z^-1 A_b X)
    Matrix schur(m, m);
    double tr_zix = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr_zix += zix(i, i);
    schur(0, 0) = tr_zix;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      schur(0, e + 1) = schur(e + 1, 0) = zix(i, j) + zix(j, i);
      for (std::size_t f = e; f < edges.size(); ++f) {
        const auto [k, l] = edges[f];
        const double v = zi(j, k) * x(l, i) + zi(j, l) * x(k, i) + zi(i, k) * x(l, j) + zi(i, l) * x(k, j);
        schur(e + 1, f + 1) = schur(f + 1, e + 1) = v;
      }
    }
    // rhs = mu A(Z^-1) - b
    std::vector<double> rhs(m);
    double tr_zi = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr_zi += zi(i, i);
    rhs[0] = mu * tr_zi - 1.0;
    for (std::size_t e = 0; e < edges.size(); ++e) rhs[e + 1] = mu * 2.0 * zi(edges[e].first, edges[e].second);

    const auto factor = cholesky(schur);
    if (!factor) break;
    const std::vector<double> dy = cholesky_solve(*factor, rhs);

    Matrix dz(n, n);
    for (std::size_t i = 0; i < n; ++i) dz(i, i) = dy[0];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      dz(i, j) = dz(j, i) = dy[e + 1];
    }
    // dX = mu Z^-1 - X - Z^-1 dZ X, symmetrized
    const Matrix zidzx = zi * dz * x;
    Matrix dx(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dx(i, j) = mu * zi(i, j) - x(i, j) - zidzx(i, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) dx(i, j) = dx(j, i) = 0.5 * (dx(i, j) + dx(j, i));
    }

    const double alpha_p = detail::step_length(x, dx);
    const double alpha_d = detail::step_length(z, dz);
    x += alpha_p * dx;
    for (std::size_t a = 0; a < m; ++a) y[a] += alpha_d * dy[a];
    z = detail::dual_slack(n, edges, y);

    const double zx = inner(z, x);
    mu = zx / (2.0 * static_cast<double>(n));
    if (alpha_p + alpha_d > 1.8) mu *= 0.5;

    result.gap_reached = improve();
    if (zx <= 1e-14 * std::max(1.0, y[0])) break;
  }

  result.primal_residual = primal_residual(g, result.primal_X);
  if (result.primal_residual > 1e-8 || !dual_pattern_exact(g, result.dual_B)) {
    throw Error(ErrorKind::kConvergenceFailure, "certificate failed re-validation");
  }
  result.gap = result.upper - result.lower;
  return result;
}

/// 1 - lambda_1(A)/lambda_n(A) for A = adjacency(g); a lower bound on theta(complement(g)).
inline double theta_spectral_lower_of_complement(const Graph& g) {
  if (g.num_edges() == 0) throw Error(ErrorKind::kNoEdges, "graph has no edges");
  const auto eigenvalues = eigen_sym(adjacency_matrix(g), false).eigenvalues;
  return 1.0 - eigenvalues.front() / eigenvalues.back();
}

namespace detail {

inline void require_unit_handle(const std::vector<double>& x, std::size_t d) {
  if (x.size() != d) throw Error(ErrorKind::kDimensionMismatch, "handle dimension differs from d");
  if (std::abs(std::sqrt(dot(x, x)) - 1.0) > 1e-8) {
    throw Error(ErrorKind::kPreconditionViolated, "handle must be a unit vector");
  }
}

inline void require_valid(const OrthoRep& rep, const Graph& target) {
  const auto v = validate_rep(rep, target);
  if (!v.valid) throw Error(ErrorKind::kRepInvalid, "representation residual " + std::to_string(v.max_residual));
}

}  // namespace detail

/// max_v <x, f(v)>^-2 for a representation of g; an upper bound on theta(g).
inline double theta_upper_from_rep(const Graph& g, const OrthoRep& rep, const std::vector<double>& x) {
  detail::require_valid(rep, g);
  detail::require_unit_handle(x, rep.d());
  double worst = 0.0;
  for (Vertex v = 0; v < g.n(); ++v) {
    const double c = dot(x, rep[v]);
    if (std::abs(c) <= 1e-12) {
      throw Error(ErrorKind::kHandleOrthogonalToVector, "handle orthogonal to f(" + std::to_string(v) + ")");
    }
    worst = std::max(worst, 1.0 / (c * c));
  }
  return worst;
}

/// sum_v <x, f(v)>^2 for a representation of complement(g); a lower bound on theta(g).
inline double theta_lower_from_rep(const Graph& g, const OrthoRep& rep_of_complement, const std::vector<double>& x) {
  detail::require_valid(rep_of_complement, complement(g));
  detail::require_unit_handle(x, rep_of_complement.d());
  double total = 0.0;
  for (Vertex v = 0; v < g.n(); ++v) total += std::pow(dot(x, rep_of_complement[v]), 2);
  return total;
}

/// (n / sqrt(theta(G)), sqrt(n theta(complement G))).
inline std::pair<double, double> L_bounds(const Graph& g, double theta_g, double theta_gbar) {
  const double n = static_cast<double>(g.n());
  return {n / std::sqrt(theta_g), std::sqrt(n * theta_gbar)};
}

struct TransitiveIdentityReport {
  ThetaResult theta_g;
  ThetaResult theta_gbar;
  double product = 0.0;  // product of the bracket midpoints
  double product_low = 0.0;
  double product_high = 0.0;
  bool pass = false;
};

/// |theta(G) theta(complement G) - n| <= tol n for a vertex-transitive g (asserted by the caller).
inline TransitiveIdentityReport transitive_identity_check(const Graph& g, double tol, const ThetaOptions& options = {}) {
  TransitiveIdentityReport r;
  r.theta_g = theta_sdp(g, options);
  r.theta_gbar = theta_sdp(complement(g), options);
  r.product = r.theta_g.value() * r.theta_gbar.value();
  r.product_low = r.theta_g.lower * r.theta_gbar.lower;
  r.product_high = r.theta_g.upper * r.theta_gbar.upper;
  const double n = static_cast<double>(g.n());
  r.pass = std::abs(r.product - n) <= tol * n;
  return r;
}

enum class CycleFamily { kOdd, kEven };

struct BoundFormulaReport {
  CycleFamily family = CycleFamily::kOdd;
  std::size_t t = 0;
  std::size_t n = 0;
  double theta_complement = 0.0;  // sdp upper certificate, or spectral lower bound above the cap
  bool from_solver = false;
  double formula = 0.0;
  double margin = 0.0;  // formula - theta_complement
  bool pass = false;
};

/// theta(complement g) against ((6t)^{2t} n)^{1/(2t+1)} for C_{2t+1}-free g,
/// or 12 t n^{1/(2t)} for C_{2t}-free g.
inline BoundFormulaReport bound_formula_check(const Graph& g, CycleFamily family, std::size_t t,
                                              const ThetaOptions& options = {}) {
  if (t < 1 || (family == CycleFamily::kEven && t < 2)) {
    throw Error(ErrorKind::kPreconditionViolated, "t must be >= 1 (odd) or >= 2 (even)");
  }
  const std::size_t length = family == CycleFamily::kOdd ? 2 * t + 1 : 2 * t;
  if (contains_cycle(g, length)) {
    throw Error(ErrorKind::kPreconditionViolated, "graph contains C" + std::to_string(length));
  }
  BoundFormulaReport r;
  r.family = family;
  r.t = t;
  r.n = g.n();
  const double n = static_cast<double>(g.n());
  const double td = static_cast<double>(t);
  r.formula = family == CycleFamily::kOdd ? std::pow(std::pow(6.0 * td, 2.0 * td) * n, 1.0 / (2.0 * td + 1.0))
                                          : 12.0 * td * std::pow(n, 1.0 / (2.0 * td));
  const Graph gbar = complement(g);
  if (g.n() <= solver_cap() && gbar.num_edges() + 1 <= kMaxSolverConstraints) {
    r.theta_complement = theta_sdp(gbar, options).upper;
    r.from_solver = true;
  } else {
    r.theta_complement = theta_spectral_lower_of_complement(g);
  }
  r.margin = r.formula - r.theta_complement;
  r.pass = r.margin >= 0.0;
  return r;
}

struct NeighborhoodEntry {
  Vertex u = 0;
  double weight = 0.0;  // sum_{w in N(u)} <f(u), f(w)>^2
  double bound = 0.0;   // upper certificate of theta(complement(G[N(u)]))
};

struct NeighborhoodReport {
  bool pass = true;
  std::vector<NeighborhoodEntry> entries;
};

/// Per-vertex step of the clique-rank argument: f restricted to N(u) represents
/// G[N(u)], so with handle f(u) its weight is at most theta(complement(G[N(u)])).
inline NeighborhoodReport neighborhood_theta_check(const OrthoRep& rep, const Graph& g, double tol = 1e-6) {
  detail::require_valid(rep, g);
  NeighborhoodReport report;
  for (Vertex u = 0; u < g.n(); ++u) {
    const auto nbrs = g.neighbors(u).members();
    NeighborhoodEntry entry{u, 0.0, 0.0};
    for (Vertex w : nbrs) entry.weight += std::pow(dot(rep[u], rep[w]), 2);
    entry.bound = nbrs.empty() ? 0.0 : theta_sdp(complement(g.induced(nbrs))).upper;
    if (entry.weight > entry.bound + tol) report.pass = false;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace thetalab
