#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/spectral.hpp"

using namespace rainbow;

TEST(SpectralRadius, Anchors) {
  EXPECT_NEAR(spectral_radius(k2_join_3k1()).value, 3.0, 1e-9);
  EXPECT_NEAR(spectral_radius(star_graph(3)).value, std::sqrt(3.0), 1e-9);
  for (int n = 2; n <= 50; ++n) EXPECT_NEAR(spectral_radius(complete_graph(n)).value, n - 1.0, 1e-9);
  EXPECT_EQ(spectral_radius(empty_graph(4)).value, 0.0);
}

TEST(SpectralRadius, EstimateInvariants) {
  auto rng = stream_rng(21, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph_any_density(2 + trial % 11, rng);
    const auto est = spectral_radius(g);
    EXPECT_LE(est.tolerance, 1e-9);
    ASSERT_EQ(static_cast<int>(est.certificate.size()), g.order());
    for (double x : est.certificate) EXPECT_GE(x, 0.0);
    const double rq = rayleigh_quotient(adjacency_matrix(g), est.certificate);
    EXPECT_LE(rq, est.value + est.tolerance);
    EXPECT_GE(rq, est.value - est.tolerance);
  }
}

TEST(SpectralRadius, AgreesWithDenseEigensolve) {
  auto rng = stream_rng(22, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = oracle::random_graph_any_density(1 + trial % 12, rng);
    EXPECT_NEAR(spectral_radius(g).value, oracle::rho(g), 1e-7);
  }
}

TEST(SpectralRadius, DisconnectedTakesLargestComponent) {
  const auto g = disjoint_union(complete_graph(4), cycle_graph(6));
  EXPECT_NEAR(spectral_radius(g).value, 3.0, 1e-9);
  const auto h = disjoint_union(star_graph(3), complete_graph(2));
  EXPECT_NEAR(spectral_radius(h).value, std::sqrt(3.0), 1e-9);
}

TEST(SpectralRadius, EdgeAdditionMonotone) {
  auto rng = stream_rng(23, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 10;
    const auto g = oracle::random_graph_any_density(n, rng);
    if (g.edge_count() == binomial2(n)) continue;
    std::uniform_int_distribution<int> pick(1, n);
    int u = pick(rng), v = pick(rng);
    while (u == v || g.has_edge(u, v)) {
      u = pick(rng);
      v = pick(rng);
    }
    const auto a = spectral_radius(g);
    const auto b = spectral_radius(g.with_edge(u, v));
    EXPECT_GE(b.value, a.value - 2 * a.tolerance);
  }
}

TEST(SignlessLaplacian, Anchors) {
  for (int n = 2; n <= 30; ++n) EXPECT_NEAR(signless_laplacian_radius(complete_graph(n)).value, 2.0 * n - 2, 1e-9);
  EXPECT_EQ(signless_laplacian_radius(empty_graph(4)).value, 0.0);
}

TEST(SignlessLaplacian, DominatesTwiceAdjacencyRadius) {
  auto rng = stream_rng(24, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = oracle::random_graph_any_density(2 + trial % 11, rng);
    const auto a = spectral_radius(g);
    const auto s = signless_laplacian_radius(g);
    EXPECT_GE(s.value, 2 * a.value - 2 * a.tolerance);
    EXPECT_NEAR(s.value, oracle::rho_s(g), 1e-7);
  }
}

TEST(Stanley, Examples) {
  EXPECT_TRUE(stanley_check(complete_graph(6)));
  EXPECT_TRUE(stanley_check(cycle_graph(4)));
  const double r = spectral_radius(complete_graph(6)).value;
  EXPECT_NEAR(r * (r + 1) / 2, 15.0, 1e-8);
}

TEST(Stanley, HoldsOnRandomGraphs) {
  auto rng = stream_rng(25, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = oracle::random_graph_any_density(1 + trial % 12, rng);
    EXPECT_TRUE(stanley_check(g));
    const double r = oracle::rho(g);
    EXPECT_GE(g.edge_count(), r * (r + 1) / 2 - 1e-6);
  }
}

TEST(ExtremalGraph, RadiusStrictlyAboveNMinusTwo) {
  for (int n = 4; n <= 50; ++n) {
    const auto d = compare_largest_eigenvalue(extremal_graph(n), n - 2, SpectralMatrix::adjacency);
    EXPECT_EQ(d.result, Comparison::above) << "n=" << n;
    EXPECT_FALSE(d.borderline) << "n=" << n;
    EXPECT_GT(d.estimate.value - d.estimate.tolerance, n - 2.0);
  }
}

TEST(Threshold, EqualityCasesDecidedExactly) {
  // K_{n-1} u K1 sits exactly at n-2
  for (int n = 4; n <= 12; ++n) {
    const auto g = disjoint_union(complete_graph(n - 1), complete_graph(1));
    const auto d = compare_largest_eigenvalue(g, n - 2, SpectralMatrix::adjacency);
    EXPECT_EQ(d.result, Comparison::equal);
    EXPECT_TRUE(d.borderline);
  }
  const auto s = compare_largest_eigenvalue(complete_graph(5), 8, SpectralMatrix::signless_laplacian);
  EXPECT_EQ(s.result, Comparison::equal);
  EXPECT_EQ(compare_largest_eigenvalue(k2_join_3k1(), 3, SpectralMatrix::adjacency).result, Comparison::equal);
}

TEST(Threshold, ExactCountAgreesWithDenseSpectrum) {
  auto rng = stream_rng(26, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph_any_density(2 + trial % 8, rng);
    const long long t = trial % 5;
    const auto count = exact_eigenvalue_count(integer_adjacency(g), t);
    const auto ev = oracle::spectrum(oracle::adjacency(g));
    int above = 0, equal = 0;
    for (int i = 0; i < ev.size(); ++i) {
      if (ev[i] > t + 1e-7) ++above;
      else if (std::abs(ev[i] - t) <= 1e-7) ++equal;
    }
    EXPECT_EQ(count.above, above);
    EXPECT_EQ(count.equal, equal);
  }
}

TEST(Quotient, TwoPartJoin) {
  const auto q = verify_equitable_partition(k2_join_3k1(), {{1, 2}, {3, 4, 5}});
  ASSERT_EQ(q.dim, 2);
  EXPECT_EQ(q.entries, (std::vector<std::vector<long long>>{{1, 3}, {2, 0}}));
  EXPECT_EQ(q.part_sizes, (std::vector<int>{2, 3}));
  EXPECT_NEAR(quotient_largest_eigenvalue(q).value, 3.0, 1e-9);
}

TEST(Quotient, SingletonsGiveAdjacency) {
  auto rng = stream_rng(27, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_graph_any_density(2 + trial % 8, rng);
    std::vector<std::vector<int>> parts;
    for (int v = 1; v <= g.order(); ++v) parts.push_back({v});
    EXPECT_EQ(verify_equitable_partition(g, parts).entries, integer_adjacency(g));
  }
}

TEST(Quotient, CliqueEdgeDeletedExtremalGraph) {
  for (int n = 5; n <= 12; ++n) {
    const auto g = extremal_graph(n).without_edge(2, 3);
    const auto q = verify_equitable_partition(g, clique_edge_deleted_parts(n));
    EXPECT_EQ(q.entries, clique_edge_deleted_quotient(n).entries) << "n=" << n;
    const double top = quotient_largest_eigenvalue(q).value;
    EXPECT_NEAR(top, spectral_radius(g).value, 1e-9);
    EXPECT_NEAR(top, oracle::rho(g), 1e-7);
    EXPECT_LT(top, n - 2.0);
  }
}

TEST(Quotient, NotEquitableNamesTheWitness) {
  try {
    verify_equitable_partition(cycle_graph(4).with_edge(1, 3), {{1, 2}, {3, 4}});
    FAIL() << "expected NotEquitableError";
  } catch (const NotEquitableError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex"), std::string::npos);
  }
  EXPECT_THROW(verify_equitable_partition(cycle_graph(4), {{1, 2}, {3}}), std::invalid_argument);
  EXPECT_THROW(verify_equitable_partition(cycle_graph(4), {{1, 2}, {2, 3, 4}}), std::invalid_argument);
}

TEST(QuotientPolynomial, MatchesLaplaceExpansion) {
  for (int n = 5; n <= 50; ++n) {
    const auto s = quotient_polynomial_signs(n);
    EXPECT_EQ(s.value_n_minus_2, oracle::psi(n, n - 2)) << "n=" << n;
    EXPECT_EQ(s.value_n_minus_3, oracle::psi(n, n - 3)) << "n=" << n;
    EXPECT_GT(s.value_n_minus_2, 0);
    EXPECT_LT(s.value_n_minus_3, 0);
  }
  EXPECT_EQ(oracle::psi(5, 3), 17);
  EXPECT_EQ(oracle::psi(10, 8), 132);
  EXPECT_EQ(oracle::psi(50, 48), 4652);
  EXPECT_EQ(oracle::psi(50, 47), -106034);
  EXPECT_THROW(quotient_polynomial_signs(4), std::invalid_argument);
}

TEST(SubgraphAudit, SmallOrders) {
  for (int n = 4; n <= 8; ++n) {
    const auto a = subgraph_radius_audit(n);
    EXPECT_TRUE(a.clean()) << "n=" << n;
    EXPECT_GT(a.audited, 0);
    EXPECT_LE(a.max_radius, n - 2 + 1e-9);
    EXPECT_FALSE(a.equality_cases.empty());
    for (const auto& c : a.equality_cases) {
      EXPECT_TRUE(c.expected_equality) << c.description;
      const auto& g = c.graph;
      const bool kn1 = is_isomorphic(g, disjoint_union(complete_graph(n - 1), complete_graph(1))) ||
                       is_isomorphic(g, complete_graph(n - 1));
      EXPECT_TRUE(kn1) << c.description;
    }
  }
}

TEST(SubgraphAudit, NamedCases) {
  // pendant edge removed: K5 u K1
  const auto g = extremal_graph(6).without_edge(1, 6);
  EXPECT_TRUE(is_isomorphic(g, disjoint_union(complete_graph(5), complete_graph(1))));
  EXPECT_EQ(compare_largest_eigenvalue(g, 4, SpectralMatrix::adjacency).result, Comparison::equal);
  EXPECT_LT(spectral_radius(extremal_graph(6).without_edge(2, 3)).value, 4.0);
  // at n = 4 deleting the clique edge leaves K_{1,3}
  const auto star = extremal_graph(4).without_edge(2, 3);
  EXPECT_TRUE(is_isomorphic(star, star_graph(3)));
  EXPECT_NEAR(spectral_radius(star).value, std::sqrt(3.0), 1e-9);
}

TEST(Spectral, RejectsBadTolerance) {
  EXPECT_THROW(spectral_radius(complete_graph(3), 0.0), std::invalid_argument);
  EXPECT_THROW(spectral_radius(complete_graph(3), -1.0), std::invalid_argument);
}
