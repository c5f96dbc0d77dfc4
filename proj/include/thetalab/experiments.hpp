#pragma once

// Named reproduction experiments. Each one runs a set of independent sections
// (optionally concurrently) and merges their checks in a fixed order, so the
// report does not depend on scheduling.

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "thetalab/coloring.hpp"
#include "thetalab/constructions.hpp"
#include "thetalab/freeness.hpp"
#include "thetalab/ortho.hpp"
#include "thetalab/report.hpp"
#include "thetalab/theta.hpp"

namespace thetalab {

struct ExperimentOptions {
  std::uint64_t seed = 0;
  bool parallel = false;
  bool timing = false;
};

namespace detail {

using Section = std::function<std::vector<Check>(std::mt19937_64&)>;

// fn(0..count-1), concurrently when requested; results stay in index order.
template <typename Fn>
auto map_indices(std::size_t count, Fn fn, bool parallel) {
  using T = decltype(fn(std::size_t{0}));
  std::vector<T> out(count);
  if (parallel) {
    std::vector<std::future<T>> futures;
    for (std::size_t i = 0; i < count; ++i) futures.push_back(std::async(std::launch::async, fn, i));
    for (std::size_t i = 0; i < count; ++i) out[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  }
  return out;
}

// Section i gets its own generator seeded from (seed, i).
inline std::vector<Check> run_sections(const std::vector<Section>& sections, const ExperimentOptions& options) {
  const auto parts = map_indices(
      sections.size(),
      [&](std::size_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        return sections[i](rng);
      },
      options.parallel);
  std::vector<Check> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Random graph with no cycle of length k: edges are added in random order when they keep it C_k-free.
inline Graph random_cycle_free(std::size_t n, std::size_t k, double keep, std::mt19937_64& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> edges;
  for (const auto& e : pairs) {
    if (!coin(rng)) continue;
    edges.push_back(e);
    if (contains_cycle(Graph::from_edges(n, edges), k)) edges.pop_back();
  }
  return Graph::from_edges(n, edges);
}

inline std::string tag(const std::string& base, std::uint64_t a, std::uint64_t b) {
  return base + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

inline std::vector<Check> furedi_instance(std::uint64_t q, std::uint64_t t) {
  CheckList c;
  const auto fg = furedi_graph(q, t);
  const std::string id = tag("furedi", q, t);
  const double qd = static_cast<double>(q);
  const double td = static_cast<double>(t);
  c.equal(id + " vertex count", "furedi_graph", "n = (q^2 - 1)/t", static_cast<std::int64_t>((q * q - 1) / t),
          static_cast<std::int64_t>(fg.graph.n()));
  const auto degrees = fg.loop_degrees();
  const bool regular = std::all_of(degrees.begin(), degrees.end(), [&](std::int64_t d) { return d == static_cast<std::int64_t>(q); });
  c.holds(id + " loop-included graph is q-regular", "furedi_graph", "q-regular before loop removal", regular);
  c.holds(id + " K_{2,t+1}-free", "contains_complete_bipartite", "G is K_{2,t+1}-free",
          !contains_complete_bipartite(fg.graph, 2, t + 1));
  const auto identity = furedi_square_identity(fg);
  c.equal(id + " A^2 identity max residual", "furedi_square_identity", "A^2 = (q - t)I + tJ - tQ", 0,
          identity.max_abs_residual);
  c.holds(id + " Q row sums", "furedi_square_identity", "each row of Q has (q - 1 - t)/t ones", identity.q_rows_hold);
  const double nontrivial = nontrivial_spectral_radius(eigen_sym(adjacency_matrix(fg.graph), false).eigenvalues);
  c.at_most(id + " nontrivial eigenvalues after loop removal", "eigen_sym",
            "max_{i>=2} |lambda_i| <= sqrt(2q - 2t - 1), eigenvalues change by at most 1",
            std::sqrt(2.0 * qd - 2.0 * td - 1.0) + 1.0, nontrivial, 1e-9);
  const auto loop_eigs = eigen_sym(fg.loop_adjacency.to_sym(), false).eigenvalues;
  c.at_most(id + " nontrivial eigenvalues with loops", "eigen_sym", "max_{i>=2} |lambda_i| <= sqrt(2q - 2t - 1)",
            std::sqrt(2.0 * qd - 2.0 * td - 1.0), nontrivial_spectral_radius(loop_eigs), 1e-9);
  c.at_least(id + " spectral lower bound on theta of complement", "theta_spectral_lower_of_complement",
             "theta(complement G) >= 1 + q/sqrt(2q - 2t - 1) - 1",
             qd / std::sqrt(2.0 * qd - 2.0 * td - 1.0), theta_spectral_lower_of_complement(fg.graph), 1e-9);
  c.at_least(id + " loop-included spectral bound", "eigen_sym",
             "1 - lambda_1/lambda_n >= 1 + q/sqrt(2q - 2t - 1)",
             1.0 + qd / std::sqrt(2.0 * qd - 2.0 * td - 1.0), 1.0 - loop_eigs.front() / loop_eigs.back(), 1e-9);
  return std::move(c.checks);
}

inline std::vector<Check> polarity_instance(std::uint64_t q) {
  CheckList c;
  const auto pg = polarity_graph(q);
  const std::string id = "polarity(" + std::to_string(q) + ")";
  const Graph& g = pg.graph;
  c.equal(id + " vertex count", "polarity_graph", "n = q^2 + q + 1", static_cast<std::int64_t>(q * q + q + 1),
          static_cast<std::int64_t>(g.n()));
  c.holds(id + " C4-free", "contains_cycle", "the polarity graph is C4-free", !contains_cycle(g, 4));
  std::int64_t low = 0;
  bool degrees_ok = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == q) {
      ++low;
    } else if (g.degree(v) != q + 1) {
      degrees_ok = false;
    }
  }
  c.holds(id + " degrees in {q, q+1}", "polarity_graph", "degrees q or q + 1", degrees_ok);
  c.equal(id + " vertices of degree q", "polarity_graph", "q + 1 absolute points", static_cast<std::int64_t>(q + 1),
          low);
  const double sq = std::sqrt(static_cast<double>(q));
  c.at_most(id + " nontrivial eigenvalues after loop removal", "eigen_sym",
            "nontrivial eigenvalues equal to sqrt(q) in absolute value, changed by at most 1", sq + 1.0,
            nontrivial_spectral_radius(eigen_sym(adjacency_matrix(g), false).eigenvalues), 1e-9);
  c.near(id + " nontrivial eigenvalues with loops", "eigen_sym", "nontrivial eigenvalues equal to sqrt(q)", sq,
         nontrivial_spectral_radius(eigen_sym(pg.loop_adjacency.to_sym(), false).eigenvalues), 1e-9);
  return std::move(c.checks);
}

}  // namespace detail

inline ExperimentReport experiment_furedi_spectral(const ExperimentOptions& o) {
  ExperimentReport r{"furedi-spectral", {{"instances", {{{"q", 5}, {"t", 2}}, {{"q", 13}, {"t", 4}}}}}, {}, o.seed, {}};
  r.checks = detail::run_sections({[](std::mt19937_64&) { return detail::furedi_instance(5, 2); },
                                   [](std::mt19937_64&) { return detail::furedi_instance(13, 4); }},
                                  o);
  return r;
}

inline ExperimentReport experiment_polarity_c4(const ExperimentOptions& o) {
  ExperimentReport r{"polarity-c4", {{"q", {2, 3, 4}}}, {}, o.seed, {}};
  std::vector<detail::Section> sections;
  for (std::uint64_t q : {2, 3, 4}) sections.push_back([q](std::mt19937_64&) { return detail::polarity_instance(q); });
  r.checks = detail::run_sections(sections, o);
  return r;
}

inline constexpr double kSqrt5Printed = 2.23606798;  // sqrt 5 to 9 significant digits
inline constexpr double kPrintedHalfUlp = 5e-9;

inline ExperimentReport experiment_theta_sandwich(const ExperimentOptions& o) {
  ExperimentReport r{"theta-sandwich", {{"max_n", 10}, {"solver_tol", 1e-8}, {"gap_limit", 1e-5}}, {}, o.seed, {}};
  const ThetaOptions solver{1e-8, 200};
  std::vector<detail::Section> sections;
  sections.push_back([solver](std::mt19937_64&) {
    CheckList c;
    double worst_complete = 0.0;
    double worst_empty = 0.0;
    double worst_gap = 0.0;
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto k = theta_sdp(make_complete(n), solver);
      const auto e = theta_sdp(make_empty(n), solver);
      const double nd = static_cast<double>(n);
      worst_complete = std::max({worst_complete, std::abs(k.lower - 1.0), std::abs(k.upper - 1.0)});
      worst_empty = std::max({worst_empty, std::abs(e.lower - nd), std::abs(e.upper - nd)});
      worst_gap = std::max({worst_gap, k.gap, e.gap});
    }
    c.at_most("theta(K_n) = 1 for n <= 10, worst deviation", "theta_sdp", "theta(K_n) = 1", 0.0, worst_complete, 1e-8);
    c.at_most("theta(empty_n) = n for n <= 10, worst deviation", "theta_sdp", "theta(empty_n) = n", 0.0, worst_empty,
              1e-8);
    c.at_most("largest certified gap", "theta_sdp", "upper - lower", 1e-5, worst_gap, 0.0);
    return std::move(c.checks);
  });
  sections.push_back([solver](std::mt19937_64&) {
    CheckList c;
    const auto g = theta_sdp(make_cycle(5), solver);
    const auto gbar = theta_sdp(complement(make_cycle(5)), solver);
    c.at_most("theta(C5) certified lower", "theta_sdp", "theta(C5) = sqrt 5", kSqrt5Printed, g.lower, kPrintedHalfUlp);
    c.at_least("theta(C5) certified upper", "theta_sdp", "theta(C5) = sqrt 5", kSqrt5Printed, g.upper, kPrintedHalfUlp);
    c.at_most("theta(C5) gap", "theta_sdp", "upper - lower", 1e-5, g.gap, 0.0);
    c.near("theta(C5) theta(complement C5)", "transitive_identity_check",
           "theta(complement G) theta(G) = n for vertex-transitive G", 5.0, g.value() * gbar.value(), 1e-4);
    return std::move(c.checks);
  });
  sections.push_back([solver](std::mt19937_64&) {
    CheckList c;
    const auto pet = transitive_identity_check(make_petersen(), 1e-5, solver);
    c.near("theta(Petersen) theta(complement Petersen)", "transitive_identity_check",
           "theta(complement G) theta(G) = n for vertex-transitive G", 10.0, pet.product, 1e-4);
    return std::move(c.checks);
  });
  r.checks = detail::run_sections(sections, o);
  return r;
}

inline ExperimentReport experiment_definition_consistency(const ExperimentOptions& o) {
  constexpr int kGraphs = 50;
  constexpr int kReps = 20;
  constexpr int kHandles = 5;
  constexpr double kTol = 1e-5;
  ExperimentReport r{"definition-consistency",
                     {{"graphs", kGraphs}, {"max_n", 10}, {"reps_per_graph", kReps}, {"handles_per_rep", kHandles}},
                     {},
                     o.seed,
                     {}};
  r.checks = detail::run_sections(
      {[](std::mt19937_64& rng) {
        // worst excess of each bound over the solver bracket; <= 0 means consistent
        double def2 = -1e300, def4 = -1e300, def3 = -1e300, gap = 0.0;
        std::uniform_int_distribution<std::size_t> size(2, 10);
        std::uniform_real_distribution<double> density(0.15, 0.85);
        for (int i = 0; i < kGraphs; ++i) {
          const auto g = detail::random_gnp(size(rng), density(rng), rng);
          const auto gbar = complement(g);
          const auto bracket = theta_sdp(g);
          gap = std::max(gap, bracket.gap);
          if (gbar.num_edges() > 0) def2 = std::max(def2, theta_spectral_lower_of_complement(gbar) - bracket.upper);
          for (int k = 0; k < kReps; ++k) {
            const auto rep_gbar = random_rep(gbar, rng());
            const auto rep_g = random_rep(g, rng());
            for (int h = 0; h < kHandles; ++h) {
              def4 = std::max(def4, theta_lower_from_rep(g, rep_gbar, random_handle(rep_gbar.d(), rng)) - bracket.upper);
              def3 = std::max(def3, bracket.lower - theta_upper_from_rep(g, rep_g, random_handle(rep_g.d(), rng)));
            }
          }
        }
        CheckList c;
        c.at_most("largest certified gap", "theta_sdp", "upper - lower", kTol, gap, 0.0);
        c.at_most("spectral lower bound minus solver upper", "theta_spectral_lower_of_complement",
                  "theta(G) >= 1 - lambda_1(A)/lambda_n(A) for A symmetric, zero diagonal, zero on non-edges of G",
                  0.0, def2, kTol);
        c.at_most("representation lower bound minus solver upper", "theta_lower_from_rep",
                  "theta(G) = max sum_v <x, f(v)>^2 over representations of the complement", 0.0, def4, kTol);
        c.at_most("solver lower minus representation upper bound", "theta_upper_from_rep",
                  "theta(G) = min max_v <x, f(v)>^-2 over representations of G", 0.0, def3, kTol);
        return std::move(c.checks);
      }},
      o);
  return r;
}

inline ExperimentReport experiment_schnirelmann(const ExperimentOptions& o) {
  ExperimentReport r{"schnirelmann", {{"representations", 100}, {"psd_matrices", 100}, {"max_n", 20}}, {}, o.seed, {}};
  const std::string anchor = "tr(M)^2 <= rk(M) tr(M^2)";
  std::vector<detail::Section> sections;
  sections.push_back([anchor](std::mt19937_64& rng) {
    double worst = 1e300;
    std::uniform_int_distribution<std::size_t> size(1, 20);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 100; ++i) {
      const auto g = detail::random_gnp(size(rng), density(rng), rng);
      worst = std::min(worst, schnirelmann_check(gram(random_rep(g, rng()))).slack);
    }
    CheckList c;
    c.at_least("smallest slack over generated Gram matrices", "schnirelmann_check", anchor, 0.0, worst, 1e-9);
    return std::move(c.checks);
  });
  sections.push_back([anchor](std::mt19937_64& rng) {
    double worst = 1e300;
    std::uniform_int_distribution<std::size_t> size(1, 20);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = size(rng);
      const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
      Matrix f(n, k);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < k; ++b) f(a, b) = gauss(rng);
      }
      worst = std::min(worst, schnirelmann_check(SymMatrix::from_dense(f * f.transpose())).slack);
    }
    CheckList c;
    c.at_least("smallest slack over random psd matrices", "schnirelmann_check", anchor, 0.0, worst, 1e-9);
    return std::move(c.checks);
  });
  sections.push_back([anchor](std::mt19937_64&) {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 20; ++n) worst = std::max(worst, std::abs(schnirelmann_check(SymMatrix::identity(n)).slack));
    for (std::size_t t = 1; t <= 5; ++t) {
      for (std::size_t blocks = 1; blocks <= 4; ++blocks) {
        const std::size_t n = t * blocks;
        const auto m = gram(basis_rep_from_clique_cover(clique_union(n, t), clique_union_parts(n, t)));
        worst = std::max(worst, std::abs(schnirelmann_check(m).slack));
      }
    }
    CheckList c;
    c.at_most("largest |slack| in equality cases", "schnirelmann_check",
              "equality when the nonzero eigenvalues coincide", 0.0, worst, 1e-6);
    return std::move(c.checks);
  });
  r.checks = detail::run_sections(sections, o);
  return r;
}

inline ExperimentReport experiment_msr_cycle(const ExperimentOptions& o) {
  ExperimentReport r{"msr-cycle", {{"n", {5, 30}}, {"t", {3, 5}}}, {}, o.seed, {}};
  r.checks = detail::run_sections(
      {[](std::mt19937_64&) {
        std::int64_t instances = 0, free = 0, valid = 0, dims = 0, traces = 0, chains = 0;
        for (std::size_t n = 5; n <= 30; ++n) {
          for (std::size_t t = 3; t <= 5; ++t) {
            ++instances;
            const auto cert = msr_upper_certificate(n, Pattern::cycle(t));
            free += cert.pattern_free ? 1 : 0;
            valid += cert.rep_valid ? 1 : 0;
            dims += cert.dimension == (n + t - 2) / (t - 1) ? 1 : 0;
            const auto chain = msr_lower_chain_check(cert.rep, cert.graph, t - 1);
            // sum of squared block sizes: n(t-1) when (t-1) | n, smaller otherwise
            double blocks = 0.0;
            for (const auto& part : clique_union_parts(n, t - 1)) blocks += std::pow(static_cast<double>(part.size()), 2);
            const bool exact = n % (t - 1) == 0 ? chain.trace_sq == static_cast<double>(n * (t - 1))
                                                : chain.trace_sq < static_cast<double>(n * (t - 1));
            traces += (chain.trace_sq == blocks && exact && chain.trace_sq_ok) ? 1 : 0;
            chains += chain.chain_ok ? 1 : 0;
          }
        }
        CheckList c;
        c.equal("clique unions free of C_t", "msr_upper_certificate", "clique_union(n, t-1) is C_t-free", instances, free);
        c.equal("representations valid", "validate_rep", "assigning e_i to each vertex of the i-th clique", instances,
                valid);
        c.equal("dimension ceil(n/(t-1))", "msr_upper_certificate", "rho(n, C_t) <= ceil(n/(t-1))", instances, dims);
        c.equal("tr(M^2) = sum of squared clique sizes <= n(t-1)", "msr_lower_chain_check",
                "tr(M^2) <= n(t-1), equality when (t-1) | n", instances, traces);
        c.equal("n^2 <= d tr(M^2)", "msr_lower_chain_check", "n^2 <= d n t", instances, chains);
        return std::move(c.checks);
      }},
      o);
  return r;
}

inline ExperimentReport experiment_trace_power(const ExperimentOptions& o) {
  ExperimentReport r{"trace-power", {{"odd_reps", 50}, {"even_reps", 20}, {"max_n", 16}}, {}, o.seed, {}};
  auto family = [](Parity parity, int count) {
    return [parity, count](std::mt19937_64& rng) {
      const std::size_t t = parity == Parity::kOdd ? 1 : 2;
      const std::size_t length = parity == Parity::kOdd ? 3 : 4;
      double trace_ratio = 0.0;
      double lambda_ratio = 0.0;
      std::int64_t verified = 0;
      std::uniform_int_distribution<std::size_t> size(4, 16);
      std::uniform_real_distribution<double> keep(0.3, 1.0);
      for (int i = 0; i < count; ++i) {
        const auto g = detail::random_cycle_free(size(rng), length, keep(rng), rng);
        verified += contains_cycle(g, length) ? 0 : 1;
        const auto cert = trace_power_certificate(random_rep(g, rng()), g, t, parity);
        trace_ratio = std::max(trace_ratio, cert.trace_power / cert.bound);
        lambda_ratio = std::max(lambda_ratio, cert.lambda_max / cert.lambda_bound);
      }
      CheckList c;
      const std::string name = parity == Parity::kOdd ? "triangle-free" : "C4-free";
      const std::string trace_anchor = parity == Parity::kOdd ? "tr(M^{2t+1}) <= (6t)^{2t} n" : "tr(M^{2t}) <= (12t)^{2t} n";
      c.equal(name + " graphs verified", "contains_cycle", "G has no cycle of length " + std::to_string(length), count,
              verified);
      c.at_most(name + " largest tr(M^k)/bound", "trace_power_certificate", trace_anchor, 1.0, trace_ratio, 1e-12);
      c.at_most(name + " largest lambda_1(M)/bound^{1/k}", "trace_power_certificate",
                "lambda_1(M) <= (" + trace_anchor.substr(trace_anchor.find("<= ") + 3) + ")^{1/k}", 1.0, lambda_ratio,
                1e-12);
      return std::move(c.checks);
    };
  };
  r.checks = detail::run_sections({family(Parity::kOdd, 50), family(Parity::kEven, 20)}, o);
  return r;
}

inline ExperimentReport experiment_claim1_sandwich(const ExperimentOptions& o) {
  ExperimentReport r{"claim1-sandwich", {{"reps", 30}, {"max_n", 10}}, {}, o.seed, {}};
  r.checks = detail::run_sections(
      {[](std::mt19937_64& rng) {
         double excess = -1e300;
         double agreement = 0.0;
         std::uniform_int_distribution<std::size_t> size(2, 10);
         std::uniform_real_distribution<double> density(0.1, 0.9);
         for (int i = 0; i < 30; ++i) {
           const auto g = detail::random_gnp(size(rng), density(rng), rng);
           const auto rep = random_rep(g, rng());
           const auto len = rep_sum_length(rep);
           agreement = std::max(agreement, std::abs(len.raw - len.via_gram));
           const double bound = L_bounds(g, 1.0, theta_sdp(complement(g)).upper).second;
           excess = std::max(excess, len.raw - bound);
         }
         CheckList c;
         c.at_most("largest ||sum f(v)|| - sqrt(n theta(complement G))", "rep_sum_length",
                   "L(G) <= sqrt(n theta(complement G))", 0.0, excess, 1e-4);
         c.at_most("||sum f(v)|| against sqrt(1^T M 1)", "rep_sum_length", "L(G)^2 = 1^T M_f 1", 0.0, agreement, 1e-8);
         return std::move(c.checks);
       },
       [](std::mt19937_64&) {
         const auto c5 = make_cycle(5);
         const double theta = theta_sdp(c5).value();
         const double theta_bar = theta_sdp(complement(c5)).value();
         const auto [lo, hi] = L_bounds(c5, theta, theta_bar);
         const double target = std::pow(5.0, 0.75);
         CheckList c;
         c.near("C5 lower bound n/sqrt(theta(G))", "L_bounds", "n/sqrt(theta(G)) <= L(G)", target, lo, 1e-4);
         c.near("C5 upper bound sqrt(n theta(complement G))", "L_bounds", "L(G) <= sqrt(n theta(complement G))",
                target, hi, 1e-4);
         const auto len = rep_sum_length(umbrella_rep(), umbrella_axis());
         c.at_least("umbrella sign-aligned sum length", "rep_sum_length",
                    "changing the sign of f(v) if necessary, L(G) >= n/sqrt(theta(G))", 5.0 / std::pow(5.0, 0.25),
                    *len.aligned, 1e-4);
         return std::move(c.checks);
       }},
      o);
  return r;
}

struct LayerSweep {
  std::int64_t graphs = 0;
  std::int64_t cycle_free = 0;
  std::int64_t layers = 0;
  std::size_t max_chromatic = 0;

  void merge(const LayerSweep& o) {
    graphs += o.graphs;
    cycle_free += o.cycle_free;
    layers += o.layers;
    max_chromatic = std::max(max_chromatic, o.max_chromatic);
  }
};

/// Labelled graphs on n vertices with edge masks in [begin, end) and no cycle of
/// length exactly k; BFS layers i <= (k-1)/2 from every root.
inline LayerSweep layer_sweep(std::size_t n, std::size_t k, std::uint64_t begin, std::uint64_t end) {
  LayerSweep s;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v, ++bit) {
        if ((mask >> bit) & 1U) edges.emplace_back(u, v);
      }
    }
    const auto g = Graph::from_edges(n, edges);
    ++s.graphs;
    if (contains_cycle(g, k)) continue;
    ++s.cycle_free;
    const auto report = layer_chromatic_check(g, k);
    s.layers += static_cast<std::int64_t>(report.entries.size());
    s.max_chromatic = std::max(s.max_chromatic, report.max_layer_chromatic);
  }
  return s;
}

inline ExperimentReport experiment_layer_coloring(const ExperimentOptions& o) {
  constexpr std::size_t kCycle = 5;
  constexpr std::size_t kMaxN = 7;
  constexpr std::uint64_t kChunks = 16;
  ExperimentReport r{"layer-coloring", {{"k", kCycle}, {"max_n", kMaxN}}, {}, o.seed, {}};
  struct Chunk {
    std::size_t n;
    std::uint64_t begin, end;
  };
  std::vector<Chunk> chunks;
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const std::uint64_t parts = std::min(total, kChunks);
    for (std::uint64_t c = 0; c < parts; ++c) chunks.push_back({n, total * c / parts, total * (c + 1) / parts});
  }
  const auto sweeps = detail::map_indices(
      chunks.size(), [&](std::size_t i) { return layer_sweep(chunks[i].n, kCycle, chunks[i].begin, chunks[i].end); },
      o.parallel);
  std::vector<LayerSweep> by_n(kMaxN + 1);
  for (std::size_t i = 0; i < chunks.size(); ++i) by_n[chunks[i].n].merge(sweeps[i]);
  CheckList c;
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    c.at_most("n=" + std::to_string(n) + ": largest chi(G[A_i]) over " + std::to_string(by_n[n].cycle_free) +
                  " C5-free graphs",
              "layer_chromatic_check", "chi(G[A_i]) <= k - 2", static_cast<double>(kCycle - 2),
              static_cast<double>(by_n[n].max_chromatic), 0.0);
  }
  r.checks = std::move(c.checks);
  return r;
}

inline ExperimentReport experiment_even_cycle_bound(const ExperimentOptions& o) {
  ExperimentReport r{"even-cycle-bound", {{"q", {2, 3, 4}}, {"t", 2}}, {}, o.seed, {}};
  std::vector<detail::Section> sections;
  for (std::uint64_t q : {2, 3, 4}) {
    sections.push_back([q](std::mt19937_64&) {
      const auto report = bound_formula_check(polarity_graph(q).graph, CycleFamily::kEven, 2);
      CheckList c;
      const std::string id = "polarity(" + std::to_string(q) + ")";
      c.holds(id + " value from the solver", "bound_formula_check", "n within the solver cap", report.from_solver);
      c.at_most(id + " theta(complement G)", "bound_formula_check", "lambda(n, C_{2t}) <= 12 t n^{1/(2t)}",
                report.formula, report.theta_complement, 0.0);
      return std::move(c.checks);
    });
  }
  r.checks = detail::run_sections(sections, o);
  return r;
}

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"furedi-spectral", "polarity-c4",    "theta-sandwich",
                                              "definition-consistency", "schnirelmann", "msr-cycle",
                                              "trace-power",     "claim1-sandwich", "layer-coloring",
                                              "even-cycle-bound"};
  return names;
}

/// Throws PreconditionViolated for an unknown name.
inline ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& options = {}) {
  using Runner = ExperimentReport (*)(const ExperimentOptions&);
  static const std::vector<std::pair<std::string, Runner>> table{
      {"furedi-spectral", experiment_furedi_spectral},
      {"polarity-c4", experiment_polarity_c4},
      {"theta-sandwich", experiment_theta_sandwich},
      {"definition-consistency", experiment_definition_consistency},
      {"schnirelmann", experiment_schnirelmann},
      {"msr-cycle", experiment_msr_cycle},
      {"trace-power", experiment_trace_power},
      {"claim1-sandwich", experiment_claim1_sandwich},
      {"layer-coloring", experiment_layer_coloring},
      {"even-cycle-bound", experiment_even_cycle_bound},
  };
  for (const auto& [key, runner] : table) {
    if (key != name) continue;
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport report = runner(options);
    if (options.timing) {
      report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                              .count();
    }
    return report;
  }
  throw Error(ErrorKind::kPreconditionViolated, "unknown experiment '" + name + "'");
}

}  // namespace thetalab
