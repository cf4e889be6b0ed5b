#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/lifting.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/solver.hpp"

using namespace rainbow;

namespace {

std::vector<int> walk(const CanonicalEdgeSchedule& s) {
  // follow the edges in cycle order starting from the shared endpoint of e'_1 and e_2
  const auto edges = s.cycle_edges();
  const Edge first = edges.front();
  const Edge last = edges.back();
  int v = (first.u == last.u || first.u == last.v) ? first.u : first.v;
  std::vector<int> out{v};
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    v = edges[k].u == v ? edges[k].v : edges[k].u;
    out.push_back(v);
  }
  return out;
}

GraphFamily extremal_family(int n, const std::vector<std::pair<int, int>>& pendant_attachment) {
  std::vector<Graph> graphs;
  for (auto [p, a] : pendant_attachment) graphs.push_back(extremal_graph_with(n, p, a));
  return GraphFamily(std::move(graphs));
}

}  // namespace

TEST(Schedule, SmallOrders) {
  EXPECT_EQ(walk(canonical_schedule(4)), (std::vector<int>{4, 2, 3, 1}));
  EXPECT_EQ(walk(canonical_schedule(5)), (std::vector<int>{5, 2, 4, 3, 1}));
  EXPECT_EQ(walk(canonical_schedule(6)), (std::vector<int>{6, 2, 5, 3, 4, 1}));
  const auto s6 = canonical_schedule(6);
  EXPECT_EQ(s6.closing_edge, Edge(4, 1));
  EXPECT_EQ(canonical_schedule(7).closing_edge, Edge(4, 1));
  EXPECT_THROW(canonical_schedule(3), std::invalid_argument);
}

TEST(Schedule, HamiltonianUpToSixtyFour) {
  for (int n = 4; n <= 64; ++n) {
    const auto s = canonical_schedule(n);
    const auto edges = s.cycle_edges();
    ASSERT_EQ(static_cast<int>(edges.size()), n);
    EXPECT_TRUE(cycle_from_color_edges(n, edges).has_value()) << "n=" << n;
    EXPECT_EQ(static_cast<int>(s.e_list.size()), (n + 1) / 2 - 1);
    EXPECT_EQ(static_cast<int>(s.eprime_list.size()), n / 2);
  }
}

TEST(Schedule, EdgesPresentInEveryFixpointAboveSize) {
  auto rng = stream_rng(51, 0);
  for (int n = 4; n <= 10; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = random_graph_in_size_range(n, static_cast<int>(extremal_size(n)) + 1,
                                                static_cast<int>(binomial2(n)), rng);
      const auto k = kelmans_fixpoint(g);
      for (const auto& e : canonical_schedule(n).cycle_edges()) {
        if (e == Edge(2, n)) continue;
        EXPECT_TRUE(k.has_edge(e.u, e.v)) << "n=" << n;
      }
    }
  }
}

TEST(SizeCondition, CompleteFamily) {
  const auto f = uniform_family(complete_graph(6));
  const auto c = construct_cycle_size_condition(f);
  EXPECT_TRUE(is_rainbow_hamiltonian_cycle(f, c));
}

TEST(SizeCondition, RandomFamilies) {
  auto rng = stream_rng(52, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4 + trial % 9;
    std::vector<Graph> graphs;
    for (int i = 0; i < n; ++i) {
      graphs.push_back(random_graph_in_size_range(n, static_cast<int>(extremal_size(n)) + 1,
                                                  static_cast<int>(binomial2(n)), rng));
    }
    const GraphFamily f(std::move(graphs));
    const auto r = construct_cycle_size_condition_detailed(f);
    EXPECT_TRUE(is_rainbow_hamiltonian_cycle(f, r.cycle));
    EXPECT_TRUE(f.member(r.e2_color).edge_count() > extremal_size(n));
    EXPECT_EQ(r.cycle, lift_full(f, r.transcript, r.transformed_cycle));
  }
}

TEST(SizeCondition, RejectsSmallMember) {
  const GraphFamily f({complete_graph(5), complete_graph(5), extremal_graph(5), complete_graph(5), complete_graph(5)});
  try {
    construct_cycle_size_condition(f);
    FAIL() << "expected HypothesisViolation";
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.member(), 3);
  }
}

TEST(ExtremalProfile, PendantMultiplicities) {
  const auto f = extremal_family(6, {{6, 1}, {6, 2}, {6, 3}, {5, 1}, {5, 2}, {4, 1}});
  const auto p = extremal_profile(f);
  EXPECT_EQ(p.k(), 3);
  EXPECT_EQ(p.pendant_vertices, (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(p.multiplicities, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(p.memberships[0], (std::vector<int>{6}));
  EXPECT_EQ(p.memberships[2], (std::vector<int>{1, 2, 3}));
}

TEST(Extremal, AllEqualHasNoCycle) {
  for (int n = 4; n <= 10; ++n) {
    const auto r = construct_cycle_extremal_detailed(uniform_family(extremal_graph(n)));
    EXPECT_FALSE(r.cycle.has_value());
    EXPECT_EQ(r.branch, ExtremalBranch::all_equal);
  }
  EXPECT_EQ(find_rainbow_hamiltonian_cycle(uniform_family(extremal_graph(6))).status, SolveStatus::none);
}

TEST(Extremal, Branches) {
  // one pendant vertex, two attachments
  auto f = extremal_family(5, {{5, 1}, {5, 1}, {5, 2}, {5, 1}, {5, 1}});
  auto r = construct_cycle_extremal_detailed(f);
  ASSERT_TRUE(r.cycle.has_value());
  EXPECT_EQ(r.branch, ExtremalBranch::single_pendant);
  EXPECT_TRUE(is_rainbow_hamiltonian_cycle(f, *r.cycle));

  f = extremal_family(6, {{6, 1}, {6, 2}, {6, 3}, {5, 1}, {5, 2}, {4, 1}});
  r = construct_cycle_extremal_detailed(f);
  ASSERT_TRUE(r.cycle.has_value());
  EXPECT_TRUE(is_rainbow_hamiltonian_cycle(f, *r.cycle));
}

TEST(Extremal, RandomFamiliesMatchSolver) {
  auto rng = stream_rng(53, 0);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 4 + trial % 6;
    std::vector<Graph> graphs;
    const int pendants = 1 + trial % 3;
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> pool;
    while (static_cast<int>(pool.size()) < pendants) {
      const int v = pick(rng);
      if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
    }
    for (int i = 0; i < n; ++i) {
      const int p = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      int a = pick(rng);
      while (a == p) a = pick(rng);
      graphs.push_back(extremal_graph_with(n, p, a));
    }
    const GraphFamily f(std::move(graphs));
    const auto r = construct_cycle_extremal_detailed(f);
    const bool exists = find_rainbow_hamiltonian_cycle(f).status == SolveStatus::found;
    EXPECT_EQ(r.cycle.has_value(), exists);
    EXPECT_EQ(r.cycle.has_value(), !f.all_equal());
    if (r.cycle) {
      EXPECT_TRUE(is_rainbow_hamiltonian_cycle(f, *r.cycle));
    }
  }
}

TEST(Extremal, RejectsNonExtremalMember) {
  const GraphFamily f({extremal_graph(5), extremal_graph(5), complete_graph(5), extremal_graph(5), extremal_graph(5)});
  EXPECT_THROW(construct_cycle_extremal(f), std::invalid_argument);
}

TEST(Pipeline, Routes) {
  const auto size = construct_cycle(uniform_family(complete_graph(5)));
  EXPECT_EQ(size.route, PipelineRoute::schedule_lift);
  ASSERT_TRUE(size.cycle.has_value());

  const auto f = extremal_family(5, {{5, 1}, {5, 1}, {5, 2}, {5, 1}, {5, 1}});
  const auto ext = construct_cycle(f);
  ASSERT_TRUE(ext.cycle.has_value());
  EXPECT_TRUE(is_rainbow_hamiltonian_cycle(f, *ext.cycle));

  const auto none = construct_cycle(uniform_family(extremal_graph(6)));
  EXPECT_FALSE(none.cycle.has_value());
}
