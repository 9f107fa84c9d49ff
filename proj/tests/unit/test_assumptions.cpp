#include <gtest/gtest.h>

#include <random>

#include "consensus_lab/assumptions.hpp"
#include "consensus_lab/hull.hpp"
#include "test_support.hpp"

namespace consensus_lab {
namespace {

WeightedDigraph unit(int n, std::vector<Arc> arcs) { return WeightedDigraph::unit(DirectedGraph(n, arcs)); }

WeightedDigraph complete(int n) { return unit(n, testing::all_arcs(n)); }

WeightedDigraph random_weighted(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const DirectedGraph g = testing::random_graph(n, p, rng);
  std::uniform_real_distribution<double> w(0.5, 2.0);
  std::map<Arc, double> weights;
  for (const Arc& a : g.arcs()) weights[a] = w(rng);
  return WeightedDigraph(g, weights, {0.5, 2.0});
}

const AgentState kFive = AgentState::scalar({0.3, -1.2, 2.5, 0.9, -0.4});

TEST(Communication, LinearAverageOnItsOwnGraph) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto report = check_communication_assumption(LinearAverage(), random_weighted(5, 0.3, seed), kFive, 20, seed);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.assumption, "communication");
  }
}

TEST(Communication, DrivingGraphLargerThanClaimedNeighborhoods) {
  const WeightedDigraph driving = unit(3, {{1, 2}, {3, 2}});
  const DirectedGraph claimed(3, {{1, 2}});
  const auto report =
      check_communication_assumption(LinearAverage(), driving, AgentState::scalar({0, 1, 2}), 5, 1, claimed);
  ASSERT_FALSE(report.ok());
  ASSERT_EQ(report.violations.size(), 1u);
  const auto& v = report.violations.front();
  EXPECT_EQ(v.agent, 2);
  EXPECT_GT(v.discrepancy, 0.0);
  EXPECT_EQ(v.witness(1), v.input(1));
  EXPECT_EQ(v.witness(2), v.input(2));
  EXPECT_NE(v.witness(3), v.input(3));
}

TEST(Communication, MaxUpdateOnItsOwnGraph) {
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_TRUE(check_communication_assumption(MaxUpdate(), random_weighted(5, 0.3, seed), kFive, 20, seed).ok());
}

TEST(Communication, TimeOneMapsWhenInfluenceStaysOneHop) {
  // A broadcast star and a pair of cliques: nobody hears a neighbor's neighbor.
  const WeightedDigraph star = unit(3, {{1, 2}, {1, 3}});
  const WeightedDigraph cliques = unit(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}});
  const AgentState x3 = AgentState::scalar({0.5, -1.0, 2.0});
  const AgentState x4 = AgentState::scalar({0.5, -1.0, 2.0, 0.1});
  EXPECT_TRUE(check_communication_assumption(KuramotoTime1(), star, x3, 10, 3).ok());
  EXPECT_TRUE(check_communication_assumption(KuramotoTime1(), cliques, x4, 10, 3).ok());
  const NonlinearConsensus cubic(GainSet::named("cubic"));
  EXPECT_TRUE(check_communication_assumption(cubic, star, x3, 10, 3).ok());
  EXPECT_TRUE(check_communication_assumption(cubic, cliques, x4, 10, 3).ok());
}

TEST(Communication, TimeOneMapsSeeTwoHopsAlongAChain) {
  // Over one unit of time the flow carries agent 1's state through agent 2
  // into agent 3, which only listens to agent 2.
  const WeightedDigraph chain = unit(3, {{1, 2}, {2, 3}});
  const auto report = check_communication_assumption(KuramotoTime1(), chain, AgentState::scalar({0, 1, 2}), 5, 9);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().agent, 3);
  EXPECT_GT(report.violations.front().discrepancy, 1e-6);
}

TEST(Communication, RejectsZeroTrials) {
  EXPECT_THROW(check_communication_assumption(LinearAverage(), complete(3), AgentState::scalar({0, 1, 2}), 0, 1),
               std::invalid_argument);
}

TEST(Convexity, LinearAverageWithBoundedWeights) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_weighted(6, 0.35, seed);
    EXPECT_TRUE(check_strict_convexity(LinearAverage(), g, 1000, seed).ok());
    EXPECT_TRUE(check_strict_convexity(LinearAverage(), g, 200, seed, 2).ok());
  }
}

TEST(Convexity, MaxUpdateFailsWithAWitness) {
  const WeightedDigraph g = unit(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto report = check_strict_convexity(MaxUpdate(), g, 50, 7);
  ASSERT_FALSE(report.ok());
  const auto& v = report.violations.front();
  const Node k = v.agent;
  const Node source = g.graph().sources_of(k).front();
  // The output sits on the boundary: it equals the larger neighborhood value.
  EXPECT_EQ(v.witness(k), std::max(v.input(k), v.input(source)));
  EXPECT_FALSE(v.detail.empty());
}

TEST(Convexity, MaxUpdateFailsInThePlane) {
  EXPECT_FALSE(check_strict_convexity(MaxUpdate(), complete(3), 20, 7, 2).ok());
}

TEST(Convexity, KuramotoOnCompleteGraphs) {
  for (int n = 2; n <= 4; ++n) {
    const auto report = check_strict_convexity(KuramotoTime1(), complete(n), 1000, 100 + n, 1, StateBox{-10, 10});
    EXPECT_TRUE(report.ok()) << "n=" << n << " " << (report.ok() ? "" : report.violations.front().detail);
  }
}

TEST(Convexity, KuramotoOnABroadcastStar) {
  EXPECT_TRUE(check_strict_convexity(KuramotoTime1(), unit(4, {{1, 2}, {1, 3}, {1, 4}}), 500, 5).ok());
}

TEST(Convexity, KuramotoAlongAChainLeavesLocalHulls) {
  const auto report = check_strict_convexity(KuramotoTime1(), unit(3, {{1, 2}, {2, 3}}), 1000, 5);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().agent, 3);
}

TEST(Convexity, NonlinearConsensusAndVicsek) {
  const NonlinearConsensus atan_gain(GainSet::named("atan"));
  EXPECT_TRUE(check_strict_convexity(atan_gain, complete(3), 300, 11).ok());
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    EXPECT_TRUE(check_strict_convexity(VicsekHeading(), random_weighted(5, 0.4, seed), 500, seed).ok());
}

TEST(Convexity, AgreeingNeighborhoodsAreExercised) {
  // A map that drifts when its neighborhood agrees must be caught.
  class Drift final : public UpdateMap {
   public:
    AgentState apply(Time, const WeightedDigraph& g, const AgentState& x) const override {
      AgentState y = LinearAverage().apply(0, g, x);
      for (Node k = 1; k <= y.size(); ++k) y(k) += 1e-6;
      return y;
    }
    std::string id() const override { return "drift"; }
  };
  const auto report = check_strict_convexity(Drift(), complete(3), 10, 1);
  ASSERT_FALSE(report.ok());
  bool saw_agreement = false;
  for (const auto& v : report.violations)
    saw_agreement = saw_agreement || v.detail.find("agreement") != std::string::npos;
  EXPECT_TRUE(saw_agreement);
}

TEST(Convexity, RejectsUnsupportedDimension) {
  EXPECT_THROW(check_strict_convexity(KuramotoTime1(), complete(3), 10, 1, 2), std::invalid_argument);
  EXPECT_THROW(check_strict_convexity(LinearAverage(), complete(3), 0, 1), std::invalid_argument);
}

TEST(MaxUpdatePlanar, CanLeaveTheGlobalHull) {
  const std::array<double, 2> pts[] = {{0, 1}, {1, 0}};
  const AgentState x = AgentState::planar(pts);
  const AgentState y = max_step(DirectedGraph(2, {{1, 2}, {2, 1}}), x);
  EXPECT_EQ(y(1, 0), 1.0);
  EXPECT_EQ(y(1, 1), 1.0);
  EXPECT_FALSE(contains(hull(x), hull(y), 1e-9));
}

}  // namespace
}  // namespace consensus_lab
