#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "test_support.hpp"
#include "thetalab/constructions.hpp"
#include "thetalab/theta.hpp"

namespace thetalab {
namespace {

const double kSqrt5 = std::sqrt(5.0);

void expect_certified(const Graph& g, const ThetaResult& r) {
  EXPECT_LE(r.lower, r.upper + 1e-9);
  EXPECT_LE(primal_residual(g, r.primal_X), 1e-8);
  EXPECT_TRUE(dual_pattern_exact(g, r.dual_B));
  // the certificates reproduce the reported values
  EXPECT_NEAR(r.primal_X.sum(), r.lower, 1e-12);
  EXPECT_NEAR(lambda_max(r.dual_B), r.upper, 1e-12);
}

TEST(ThetaSdp, Complete) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto g = make_complete(n);
    const auto r = theta_sdp(g);
    expect_certified(g, r);
    EXPECT_NEAR(r.lower, 1.0, 1e-8);
    EXPECT_NEAR(r.upper, 1.0, 1e-8);
  }
}

TEST(ThetaSdp, Empty) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto g = make_empty(n);
    const auto r = theta_sdp(g, {1e-8, 200});
    expect_certified(g, r);
    EXPECT_NEAR(r.lower, static_cast<double>(n), 1e-8);
    EXPECT_NEAR(r.upper, static_cast<double>(n), 1e-8);
  }
}

TEST(ThetaSdp, C5) {
  const auto r = theta_sdp(make_cycle(5));
  expect_certified(make_cycle(5), r);
  EXPECT_TRUE(r.gap_reached);
  EXPECT_LE(r.lower, 2.23606798);
  EXPECT_GE(r.upper, 2.23606797);
  EXPECT_NEAR(r.value(), kSqrt5, 1e-7);
}

TEST(ThetaSdp, KnownValues) {
  const double c = std::cos(std::numbers::pi / 7.0);
  EXPECT_NEAR(theta_sdp(make_cycle(7)).value(), 7.0 * c / (1.0 + c), 1e-7);
  EXPECT_NEAR(theta_sdp(make_petersen()).value(), 4.0, 1e-7);
  EXPECT_NEAR(theta_sdp(complement(make_petersen())).value(), 2.5, 1e-7);
  EXPECT_NEAR(theta_sdp(make_cycle(6)).value(), 3.0, 1e-7);
  EXPECT_NEAR(theta_sdp(make_complete_bipartite(3, 4)).value(), 4.0, 1e-7);
}

TEST(ThetaSdp, C5CirculantDual) {
  // circulant dual with edge value 1 - phi: lambda_max = sqrt 5 (oracle)
  SymMatrix b = SymMatrix::ones(5);
  for (Vertex i = 0; i < 5; ++i) b.set(i, (i + 1) % 5, -0.3819660112501051);
  EXPECT_NEAR(lambda_max(b), kSqrt5, 1e-12);
  EXPECT_LE(theta_sdp(make_cycle(5)).upper, lambda_max(b) + 1e-7);
}

TEST(ThetaSdp, Preconditions) {
  EXPECT_THROW((void)theta_sdp(make_empty(0)), Error);
  try {
    (void)theta_sdp(make_cycle(5), {1e-9, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPreconditionViolated);
  }
}

TEST(ThetaSdp, SolverCapFromEnvironment) {
  EXPECT_EQ(solver_cap(), kDefaultSolverCap);
  ::setenv("LAB_MAX_N", "6", 1);
  EXPECT_EQ(solver_cap(), 6u);
  try {
    (void)theta_sdp(make_cycle(7));
    ::unsetenv("LAB_MAX_N");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kComplexityRefused);
  }
  ::unsetenv("LAB_MAX_N");
}

TEST(ThetaSdp, IterationCapStillCertifies) {
  const auto g = make_petersen();
  const auto r = theta_sdp(g, {1e-8, 2});
  EXPECT_FALSE(r.gap_reached);
  EXPECT_EQ(r.iterations, 2u);
  expect_certified(g, r);
  EXPECT_LE(r.lower, 4.0 + 1e-9);
  EXPECT_GE(r.upper, 4.0 - 1e-9);
}

TEST(ThetaSdp, Deterministic) {
  const auto a = theta_sdp(make_petersen());
  const auto b = theta_sdp(make_petersen());
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(ThetaSdp, SandwichedByIndependenceAndCliqueCover) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_graph(4 + trial % 7, 0.45, rng);
    const auto r = theta_sdp(g);
    expect_certified(g, r);
    EXPECT_GE(r.upper, static_cast<double>(testing::brute_force_independence(g)) - 1e-9);
    // clique cover of g = colouring of the complement
    EXPECT_LE(r.lower, static_cast<double>(testing::brute_force_chromatic(complement(g))) + 1e-9);
  }
}

TEST(ThetaSdp, MonotoneUnderVertexDeletion) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::random_graph(5 + trial % 6, 0.4, rng);
    const double full = theta_sdp(g).upper;
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_LE(theta_sdp(g.without_vertex(v)).lower, full + 1e-6);
  }
}

TEST(SpectralLower, Examples) {
  EXPECT_NEAR(theta_spectral_lower_of_complement(make_complete(2)), 2.0, 1e-12);
  EXPECT_NEAR(theta_spectral_lower_of_complement(make_cycle(5)), kSqrt5, 1e-12);
  EXPECT_GE(theta_spectral_lower_of_complement(furedi_graph(5, 2).graph), 1.0 + 5.0 / kSqrt5 - 1.0);
  try {
    (void)theta_spectral_lower_of_complement(make_empty(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoEdges);
  }
}

TEST(SpectralLower, BelowSolver) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_graph(3 + trial % 10, 0.5, rng);
    if (g.num_edges() == 0) continue;
    EXPECT_LE(theta_spectral_lower_of_complement(g), theta_sdp(complement(g)).upper + 1e-6);
  }
}

TEST(RepBounds, UpperExamples) {
  const auto kn = make_complete(4);
  const OrthoRep same(kn, 1, std::vector<std::vector<double>>(4, {1.0}));
  EXPECT_DOUBLE_EQ(theta_upper_from_rep(kn, same, {1.0}), 1.0);

  const auto e = make_empty(4);
  std::vector<std::vector<Vertex>> singletons{{0}, {1}, {2}, {3}};
  const auto basis = basis_rep_from_clique_cover(e, singletons);
  EXPECT_NEAR(theta_upper_from_rep(e, basis, std::vector<double>(4, 0.5)), 4.0, 1e-12);

  EXPECT_NEAR(theta_upper_from_rep(make_cycle(5), umbrella_rep(), umbrella_axis()), kSqrt5, 1e-6);
}

TEST(RepBounds, UpperErrors) {
  const auto e = make_empty(2);
  const auto basis = basis_rep_from_clique_cover(e, {{0}, {1}});
  try {
    (void)theta_upper_from_rep(e, basis, {1.0, 0.0});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kHandleOrthogonalToVector);
  }
  EXPECT_THROW((void)theta_upper_from_rep(e, basis, {1.0, 1.0}), Error);
}

TEST(RepBounds, LowerExamples) {
  const auto e = make_empty(5);
  const OrthoRep same(complement(e), 1, std::vector<std::vector<double>>(5, {1.0}));
  EXPECT_DOUBLE_EQ(theta_lower_from_rep(e, same, {1.0}), 5.0);

  const OrthoRep flat(complement(e), 2, std::vector<std::vector<double>>(5, {1.0, 0.0}));
  EXPECT_DOUBLE_EQ(theta_lower_from_rep(e, flat, {0.0, 1.0}), 0.0);

  // complement of C5 under i -> 2i is C5 again; umbrella_rep(true) represents it
  EXPECT_NEAR(theta_lower_from_rep(make_cycle(5), umbrella_rep(true), umbrella_axis()), kSqrt5, 1e-6);

  try {
    (void)theta_lower_from_rep(make_cycle(5), umbrella_rep(false), umbrella_axis());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kRepInvalid);
  }
}

TEST(RepBounds, ConsistentWithSolver) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_graph(3 + trial % 10, 0.5, rng);
    const auto r = theta_sdp(g);
    const auto gbar = complement(g);
    for (int k = 0; k < 4; ++k) {
      const auto rep_g = random_rep(g, rng());
      const auto rep_gbar = random_rep(gbar, rng());
      EXPECT_LE(theta_lower_from_rep(g, rep_gbar, random_handle(rep_gbar.d(), rng)), r.upper + 1e-6);
      EXPECT_GE(theta_upper_from_rep(g, rep_g, random_handle(rep_g.d(), rng)), r.lower - 1e-6);
    }
  }
}

TEST(LBounds, Examples) {
  const auto [lo, hi] = L_bounds(make_cycle(5), kSqrt5, kSqrt5);
  EXPECT_NEAR(lo, std::pow(5.0, 0.75), 1e-12);
  EXPECT_NEAR(hi, std::pow(5.0, 0.75), 1e-12);

  const auto k = L_bounds(make_complete(6), 1.0, 6.0);
  EXPECT_DOUBLE_EQ(k.first, 6.0);
  EXPECT_DOUBLE_EQ(k.second, 6.0);

  const auto e = L_bounds(make_empty(9), 9.0, 1.0);
  EXPECT_DOUBLE_EQ(e.first, 3.0);
  EXPECT_DOUBLE_EQ(e.second, 3.0);
}

TEST(TransitiveIdentity, Examples) {
  const auto c5 = transitive_identity_check(make_cycle(5), 1e-6);
  EXPECT_TRUE(c5.pass);
  EXPECT_NEAR(c5.product, 5.0, 1e-6);
  EXPECT_LE(c5.product_low, 5.0);
  EXPECT_GE(c5.product_high, 5.0);
  EXPECT_TRUE(transitive_identity_check(make_complete(4), 1e-6).pass);
  const auto pet = transitive_identity_check(make_petersen(), 1e-6);
  EXPECT_TRUE(pet.pass);
  EXPECT_NEAR(pet.product, 10.0, 1e-5);
  // a star is not vertex-transitive: 3 * 2 != 4
  EXPECT_FALSE(transitive_identity_check(make_star(3), 1e-3).pass);
}

TEST(BoundFormula, Examples) {
  const auto pg = polarity_graph(3).graph;
  const auto even = bound_formula_check(pg, CycleFamily::kEven, 2);
  EXPECT_TRUE(even.from_solver);
  EXPECT_NEAR(even.formula, 24.0 * std::pow(13.0, 0.25), 1e-9);
  EXPECT_TRUE(even.pass);

  const auto odd = bound_formula_check(make_cycle(5), CycleFamily::kOdd, 1);
  EXPECT_NEAR(odd.theta_complement, kSqrt5, 1e-6);
  EXPECT_NEAR(odd.formula, std::cbrt(180.0), 1e-9);
  EXPECT_TRUE(odd.pass);

  const auto cu = bound_formula_check(clique_union(12, 2), CycleFamily::kOdd, 1);
  EXPECT_NEAR(cu.formula, std::cbrt(36.0 * 12.0), 1e-9);
  EXPECT_NEAR(cu.theta_complement, 2.0, 1e-6);  // complement of a perfect matching is perfect
  EXPECT_TRUE(cu.pass);

  try {
    (void)bound_formula_check(make_complete(4), CycleFamily::kOdd, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPreconditionViolated);
  }
}

TEST(BoundFormula, SpectralFallbackAboveCap) {
  ::setenv("LAB_MAX_N", "20", 1);
  const auto r = bound_formula_check(polarity_graph(5).graph, CycleFamily::kEven, 2);
  ::unsetenv("LAB_MAX_N");
  EXPECT_FALSE(r.from_solver);
  EXPECT_TRUE(r.pass);
}

TEST(Neighborhood, Definition4Step) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = testing::random_graph(8, 0.5, rng);
    EXPECT_TRUE(neighborhood_theta_check(random_rep(g, rng()), g).pass);
  }
  EXPECT_TRUE(neighborhood_theta_check(umbrella_rep(), make_cycle(5)).pass);
}

}  // namespace
}  // namespace thetalab
