// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every tolerance and runtime limit is a named constant below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "thetalab/thetalab.hpp"

namespace {

using namespace thetalab;

constexpr double kSpectralTol = 1e-9;       // eigenvalue comparisons against closed forms
constexpr double kThetaExactTol = 1e-8;     // theta(K_n), theta(empty_n)
constexpr double kGapLimit = 1e-5;          // required certified gap
constexpr double kPrintedSqrt5 = 2.23606798;
constexpr double kPrintedHalfUlp = 5e-9;    // the constant above is sqrt 5 rounded to 9 digits
constexpr double kProductTol = 1e-4;        // theta(G) theta(complement G) = n
constexpr double kConsistencyTol = 1e-5;    // definition cross-consistency
constexpr double kSlackFloor = -1e-9;       // nonnegative slack up to rounding
constexpr double kEqualityTol = 1e-6;       // |slack| in equality cases
constexpr double kTraceRel = 1e-12;         // relative rounding allowance on trace bounds
constexpr double kClaimTol = 1e-4;          // sum-length sandwich

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void furedi_checks(Outcome& out, std::uint64_t q, std::uint64_t t, bool loop_bound) {
  const auto fg = furedi_graph(q, t);
  const double qd = static_cast<double>(q);
  const double root = std::sqrt(2.0 * qd - 2.0 * static_cast<double>(t) - 1.0);
  out.require(fg.graph.n() == (q * q - 1) / t, "n = (q^2-1)/t");
  for (auto d : fg.loop_degrees()) out.require(d == static_cast<std::int64_t>(q), "loop-included degree q");
  out.require(!contains_complete_bipartite(fg.graph, 2, t + 1), "K_{2,t+1}-free");
  const auto id = furedi_square_identity(fg);
  out.require(id.identity_holds && id.max_abs_residual == 0, "A^2 identity exact");
  out.require(id.q_rows_hold && id.expected_q_row_sum == static_cast<std::int64_t>((q - 1 - t) / t), "Q row sums");
  const auto eigs = eigen_sym(adjacency_matrix(fg.graph), false).eigenvalues;
  const double radius = nontrivial_spectral_radius(eigs);
  out.require(radius <= root + 1.0 + kSpectralTol, "nontrivial radius <= sqrt(2q-2t-1) + 1");
  out.detail << " n=" << fg.graph.n() << " radius=" << radius;
  if (loop_bound) {
    const double simple = theta_spectral_lower_of_complement(fg.graph);
    out.require(simple >= 1.0 + qd / root - 1.0 - kSpectralTol, "perturbed spectral bound");
    const auto loop_eigs = eigen_sym(fg.loop_adjacency.to_sym(), false).eigenvalues;
    const double looped = 1.0 - loop_eigs.front() / loop_eigs.back();
    out.require(std::abs(looped - (1.0 + std::sqrt(5.0))) <= kSpectralTol, "loop-included bound = 1 + sqrt 5");
    out.detail << " bound=" << simple << " loop_bound=" << looped;
  }
}

Outcome criterion1() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  furedi_checks(out, 5, 2, true);
  const double secs = elapsed_s(start);
  out.require(secs < 1.0, "runtime < 1 s");
  out.detail << " time=" << secs << "s";
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  furedi_checks(out, 13, 4, false);
  const double secs = elapsed_s(start);
  out.require(secs < 2.0, "runtime < 2 s");
  out.detail << " time=" << secs << "s";
  return out;
}

Outcome criterion3() {
  Outcome out;
  for (std::uint64_t q : {2, 3, 4}) {
    const auto pg = polarity_graph(q);
    const Graph& g = pg.graph;
    out.require(g.n() == q * q + q + 1, "n = q^2+q+1");
    out.require(!contains_cycle(g, 4), "C4-free");
    std::uint64_t low = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      out.require(g.degree(v) == q || g.degree(v) == q + 1, "degree in {q, q+1}");
      low += g.degree(v) == q ? 1 : 0;
    }
    out.require(low == q + 1, "q+1 vertices of degree q");
    const double radius = nontrivial_spectral_radius(eigen_sym(adjacency_matrix(g), false).eigenvalues);
    out.require(radius <= std::sqrt(static_cast<double>(q)) + 1.0 + kSpectralTol, "radius <= sqrt q + 1");
    out.detail << " q=" << q << ":radius=" << radius;
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const ThetaOptions solver{1e-8, 200};
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto k = theta_sdp(make_complete(n), solver);
    const auto e = theta_sdp(make_empty(n), solver);
    const double nd = static_cast<double>(n);
    out.require(k.gap <= kGapLimit && e.gap <= kGapLimit, "gap <= 1e-5");
    out.require(std::abs(k.lower - 1.0) <= kThetaExactTol && std::abs(k.upper - 1.0) <= kThetaExactTol,
                "theta(K_" + std::to_string(n) + ") = 1");
    out.require(std::abs(e.lower - nd) <= kThetaExactTol && std::abs(e.upper - nd) <= kThetaExactTol,
                "theta(empty_" + std::to_string(n) + ") = n");
  }
  const auto c5 = theta_sdp(make_cycle(5), solver);
  const auto c5bar = theta_sdp(complement(make_cycle(5)), solver);
  out.require(c5.gap <= kGapLimit, "C5 gap");
  out.require(c5.lower <= kPrintedSqrt5 + kPrintedHalfUlp && kPrintedSqrt5 <= c5.upper + kPrintedHalfUlp,
              "C5 bracket contains 2.23606798");
  const double product = c5.value() * c5bar.value();
  out.require(std::abs(product - 5.0) <= kProductTol, "theta(C5) theta(complement C5) = 5");
  const double secs = elapsed_s(start);
  out.require(secs < 30.0, "runtime < 30 s");
  char buf[160];
  std::snprintf(buf, sizeof buf, " C5=[%.10f, %.10f] product=%.9f time=%.2fs", c5.lower, c5.upper, product, secs);
  out.detail << buf;
  return out;
}

Outcome criterion5() {
  Outcome out;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(2, 10);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  double worst = -1e300;
  for (int i = 0; i < 50; ++i) {
    const auto g = testing::random_graph(size(rng), density(rng), rng);
    const auto gbar = complement(g);
    const auto r = theta_sdp(g);
    out.require(r.gap <= kGapLimit, "gap <= 1e-5");
    if (gbar.num_edges() > 0) worst = std::max(worst, theta_spectral_lower_of_complement(gbar) - r.upper);
    for (int k = 0; k < 20; ++k) {
      const auto rep_gbar = random_rep(gbar, rng());
      const auto rep_g = random_rep(g, rng());
      for (int h = 0; h < 5; ++h) {
        worst = std::max(worst, theta_lower_from_rep(g, rep_gbar, random_handle(rep_gbar.d(), rng)) - r.upper);
        worst = std::max(worst, r.lower - theta_upper_from_rep(g, rep_g, random_handle(rep_g.d(), rng)));
      }
    }
  }
  out.require(worst <= kConsistencyTol, "all bounds inside the bracket");
  out.detail << " worst violation=" << worst;
  return out;
}

Outcome criterion6() {
  Outcome out;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 1e300;
  for (int i = 0; i < 100; ++i) {
    const auto g = testing::random_graph(size(rng), density(rng), rng);
    worst = std::min(worst, schnirelmann_check(gram(random_rep(g, rng()))).slack);
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = size(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    Matrix f(n, k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < k; ++b) f(a, b) = gauss(rng);
    }
    worst = std::min(worst, schnirelmann_check(SymMatrix::from_dense(f * f.transpose())).slack);
  }
  out.require(worst >= kSlackFloor, "nonnegative slack");
  double equality = 0.0;
  for (std::size_t n = 1; n <= 20; ++n) equality = std::max(equality, std::abs(schnirelmann_check(SymMatrix::identity(n)).slack));
  for (std::size_t t = 1; t <= 5; ++t) {
    for (std::size_t blocks = 1; blocks <= 4; ++blocks) {
      const std::size_t n = t * blocks;
      const auto m = gram(basis_rep_from_clique_cover(clique_union(n, t), clique_union_parts(n, t)));
      equality = std::max(equality, std::abs(schnirelmann_check(m).slack));
    }
  }
  out.require(equality <= kEqualityTol, "equality cases");
  out.detail << " min slack=" << worst << " max |equality slack|=" << equality;
  return out;
}

// Checked as stated, including tr(M^2) = n(t-1) for every (n, t).
Outcome criterion7() {
  Outcome out;
  int exact_misses = 0;
  std::string first_miss;
  for (std::size_t n = 5; n <= 30; ++n) {
    for (std::size_t t = 3; t <= 5; ++t) {
      const auto cert = msr_upper_certificate(n, Pattern::cycle(t));
      out.require(cert.pattern_free, "C_t-free");
      out.require(cert.rep_valid, "representation valid");
      out.require(cert.dimension == (n + t - 2) / (t - 1), "d = ceil(n/(t-1))");
      const auto chain = msr_lower_chain_check(cert.rep, cert.graph, t - 1);
      out.require(chain.chain_ok, "n^2 <= d tr(M^2)");
      if (chain.trace_sq != static_cast<double>(n * (t - 1))) {
        if (exact_misses++ == 0) {
          first_miss = "n=" + std::to_string(n) + ",t=" + std::to_string(t) + ": tr(M^2)=" +
                       std::to_string(static_cast<long>(chain.trace_sq)) + " vs n(t-1)=" + std::to_string(n * (t - 1));
        }
      }
    }
  }
  out.require(exact_misses == 0, "tr(M^2) = n(t-1) exactly in " + std::to_string(exact_misses) +
                                     " of 78 instances; first " + first_miss +
                                     " (the last clique is smaller when (t-1) does not divide n)");
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> size(4, 16);
  std::uniform_real_distribution<double> keep(0.3, 1.0);
  auto family = [&](std::size_t length, int count, std::size_t t, Parity parity, double bound_per_vertex) {
    double ratio = 0.0;
    for (int i = 0; i < count; ++i) {
      const auto g = detail::random_cycle_free(size(rng), length, keep(rng), rng);
      out.require(!testing::brute_force_has_cycle(g, length), "graph verified free of C" + std::to_string(length));
      const auto cert = trace_power_certificate(random_rep(g, rng()), g, t, parity);
      const double bound = bound_per_vertex * static_cast<double>(g.n());
      out.require(cert.trace_power <= bound * (1.0 + kTraceRel), "trace bound");
      out.require(cert.lambda_max <= std::pow(bound, 1.0 / cert.exponent) * (1.0 + kTraceRel), "lambda_1 bound");
      ratio = std::max(ratio, cert.trace_power / bound);
    }
    return ratio;
  };
  const double odd = family(3, 50, 1, Parity::kOdd, 36.0);
  const double even = family(4, 20, 2, Parity::kEven, std::pow(24.0, 4));
  out.detail << " max tr(M^3)/36n=" << odd << " max tr(M^4)/24^4 n=" << even;
  return out;
}

Outcome criterion9() {
  Outcome out;
  for (std::uint64_t q : {2, 3}) {
    const auto g = polarity_graph(q).graph;
    const auto r = theta_sdp(complement(g));
    const double bound = 24.0 * std::pow(static_cast<double>(g.n()), 0.25);
    out.require(r.upper <= bound, "theta(complement) <= 24 n^{1/4}");
    out.detail << " q=" << q << ":theta=" << r.upper << "<=" << bound;
  }
  return out;
}

Outcome criterion10() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::size_t worst = 0;
  std::int64_t graphs = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto sweep = layer_sweep(n, 5, 0, std::uint64_t{1} << (n * (n - 1) / 2));
    worst = std::max(worst, sweep.max_chromatic);
    graphs += sweep.cycle_free;
  }
  out.require(worst <= 3, "chi(G[A_i]) <= 3");
  const double secs = elapsed_s(start);
  out.require(secs < 60.0, "runtime < 60 s");
  out.detail << " graphs=" << graphs << " max chi=" << worst << " time=" << secs << "s";
  return out;
}

Outcome criterion11() {
  Outcome out;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> size(2, 10);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  double excess = -1e300;
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(size(rng), density(rng), rng);
    const auto len = rep_sum_length(random_rep(g, rng()));
    excess = std::max(excess, len.raw - std::sqrt(static_cast<double>(g.n()) * theta_sdp(complement(g)).upper));
  }
  out.require(excess <= kClaimTol, "sum length <= sqrt(n theta(complement G))");
  const auto c5 = make_cycle(5);
  const auto [lo, hi] = L_bounds(c5, theta_sdp(c5).value(), theta_sdp(complement(c5)).value());
  const double target = std::pow(5.0, 0.75);
  out.require(std::abs(lo - target) <= kClaimTol && std::abs(hi - target) <= kClaimTol, "C5 bounds = 5^{3/4}");
  const double aligned = *rep_sum_length(umbrella_rep(), umbrella_axis()).aligned;
  out.require(aligned >= 5.0 / std::pow(5.0, 0.25) - kClaimTol, "umbrella aligned length");
  out.detail << " max excess=" << excess << " C5 bounds=(" << lo << ", " << hi << ") aligned=" << aligned;
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 furedi spectral (q=5, t=2)", criterion1},
      {"2 furedi second instance (q=13, t=4)", criterion2},
      {"3 polarity graphs (q=2,3,4)", criterion3},
      {"4 theta sandwich", criterion4},
      {"5 definition cross-consistency", criterion5},
      {"6 schnirelman inequality", criterion6},
      {"7 msr of cycles", criterion7},
      {"8 trace-power certificates", criterion8},
      {"9 even-cycle bound", criterion9},
      {"10 layer colouring", criterion10},
      {"11 sum-length sandwich", criterion11},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %s:%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
