#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "consensus_lab/stochastic_matrix.hpp"
#include "consensus_lab/update_map.hpp"
#include "test_support.hpp"

namespace consensus_lab {
namespace {

WeightedDigraph four_node_example() {
  const std::vector<WeightedArc> arcs{{{2, 1}, 0.5}, {{1, 2}, 1.0}, {{3, 2}, 5.0}};
  return WeightedDigraph::from_arcs(4, arcs);
}

const DirectedGraph kPair(2, {{1, 2}, {2, 1}});

WeightedDigraph random_weighted(int n, double p, std::mt19937_64& rng, WeightBounds b = {0.5, 2.0}) {
  const DirectedGraph g = testing::random_graph(n, p, rng);
  std::uniform_real_distribution<double> w(b.min, b.max);
  std::map<Arc, double> weights;
  for (const Arc& a : g.arcs()) weights[a] = w(rng);
  return WeightedDigraph(g, weights, b);
}

AgentState random_scalar(int n, std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return AgentState::scalar(v);
}

double max_gap(const AgentState& a, const AgentState& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) m = std::max(m, std::abs(a.coords()[i] - b.coords()[i]));
  return m;
}

TEST(UpdateMatrix, WorkedExample) {
  const StochasticMatrix m = build_update_matrix(four_node_example());
  const double expected[4][4] = {{2.0 / 3, 1.0 / 3, 0, 0}, {1.0 / 7, 1.0 / 7, 5.0 / 7, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (Node k = 1; k <= 4; ++k)
    for (Node l = 1; l <= 4; ++l) EXPECT_NEAR(m(k, l), expected[k - 1][l - 1], 1e-15) << k << "," << l;
}

TEST(UpdateMatrix, EmptyGraphGivesIdentity) {
  const StochasticMatrix m = build_update_matrix(WeightedDigraph::unit(DirectedGraph(5)));
  EXPECT_EQ(m.entries(), StochasticMatrix::identity(5).entries());
}

TEST(UpdateMatrix, SingleArc) {
  const StochasticMatrix m = build_update_matrix(WeightedDigraph::unit(DirectedGraph(2, {{1, 2}})));
  EXPECT_EQ(m(1, 1), 1.0);
  EXPECT_EQ(m(1, 2), 0.0);
  EXPECT_EQ(m(2, 1), 0.5);
  EXPECT_EQ(m(2, 2), 0.5);
}

TEST(UpdateMatrix, MatchesTheDefiningFormulaOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const WeightedDigraph g = random_weighted(n, 0.4, rng);
    const StochasticMatrix m = build_update_matrix(g);
    for (Node k = 1; k <= n; ++k) {
      double total = 1.0;
      for (Node i = 1; i <= n; ++i)
        if (g.graph().has_arc(i, k)) total += g.weight(i, k);
      double row = 0.0;
      for (Node l = 1; l <= n; ++l) {
        const double expected = l == k ? 1.0 / total : g.graph().has_arc(l, k) ? g.weight(l, k) / total : 0.0;
        EXPECT_NEAR(m(k, l), expected, 1e-15);
        EXPECT_GE(m(k, l), 0.0);
        if (l != k) { EXPECT_EQ(m(k, l) > 0.0, g.graph().has_arc(l, k)); }
        row += m(k, l);
      }
      EXPECT_GT(m(k, k), 0.0);
      EXPECT_NEAR(row, 1.0, 1e-12);
    }
  }
}

TEST(StochasticMatrix, ValidatesInvariants) {
  EXPECT_THROW(StochasticMatrix(2, {0.5, 0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(StochasticMatrix(2, {1.2, -0.2, 0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(StochasticMatrix(2, {0.0, 1.0, 0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(StochasticMatrix(2, {0.5, 0.6, 0.5, 0.5}), std::invalid_argument);
  EXPECT_NO_THROW(StochasticMatrix(2, {0.25, 0.75, 0.5, 0.5}));
}

TEST(LinearStep, MutualPairAverages) {
  const auto m = build_update_matrix(WeightedDigraph::unit(kPair));
  EXPECT_EQ(linear_step(m, AgentState::scalar({0, 1})), AgentState::scalar({0.5, 0.5}));
}

TEST(LinearStep, IdentityLeavesStateAlone) {
  const AgentState x = AgentState::scalar({3, -1, 0.25});
  EXPECT_EQ(linear_step(StochasticMatrix::identity(3), x), x);
}

TEST(LinearStep, WorkedExampleAgainstDotProducts) {
  const auto m = build_update_matrix(four_node_example());
  const AgentState x = AgentState::scalar({0, 1, 1, 1});
  const AgentState y = linear_step(m, x);
  const double expected[4] = {1.0 / 3, 6.0 / 7, 1, 1};
  for (Node k = 1; k <= 4; ++k) {
    double dot = 0.0;
    for (Node l = 1; l <= 4; ++l) dot += m(k, l) * x(l);
    EXPECT_NEAR(y(k), dot, 1e-15);
    EXPECT_NEAR(y(k), expected[k - 1], 1e-15);
  }
}

TEST(LinearStep, PlanarStatesPerCoordinate) {
  const auto m = build_update_matrix(WeightedDigraph::unit(kPair));
  const std::array<double, 2> pts[] = {{0, 0}, {2, 4}};
  const AgentState y = linear_step(m, AgentState::planar(pts));
  EXPECT_EQ(y(1, 0), 1.0);
  EXPECT_EQ(y(1, 1), 2.0);
  EXPECT_EQ(y(2, 0), 1.0);
  EXPECT_EQ(y(2, 1), 2.0);
}

TEST(LinearStep, SizeMismatchThrows) {
  EXPECT_THROW(linear_step(StochasticMatrix::identity(3), AgentState::scalar({1, 2})), std::invalid_argument);
}

TEST(LinearStep, TranslationInvariance) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> shift(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const auto m = build_update_matrix(random_weighted(n, 0.5, rng));
    const AgentState x = random_scalar(n, rng);
    const double c = shift(rng);
    std::vector<double> moved(x.coords().begin(), x.coords().end());
    for (double& v : moved) v += c;
    const AgentState a = linear_step(m, AgentState::scalar(moved));
    const AgentState b = linear_step(m, x);
    for (Node k = 1; k <= n; ++k) EXPECT_NEAR(a(k), b(k) + c, 1e-12);
  }
}

TEST(UpdateMaps, ConsensusStatesAreFixedPoints) {
  std::mt19937_64 rng(31);
  std::vector<std::unique_ptr<UpdateMap>> maps;
  maps.push_back(std::make_unique<LinearAverage>());
  maps.push_back(std::make_unique<LinearAverage>(true));
  maps.push_back(std::make_unique<KuramotoTime1>());
  maps.push_back(std::make_unique<NonlinearConsensus>(GainSet::named("cubic")));
  maps.push_back(std::make_unique<NonlinearConsensus>(GainSet::named("tanh")));
  maps.push_back(std::make_unique<VicsekHeading>());
  std::uniform_real_distribution<double> value(-1.4, 1.4);
  for (const auto& map : maps) {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + trial % 5;
      const WeightedDigraph g = random_weighted(n, 0.5, rng);
      const AgentState x = AgentState::scalar(std::vector<double>(n, value(rng)));
      const AgentState y = map->apply(0, g, x);
      EXPECT_LE(max_gap(x, y), map->comparison_tolerance()) << map->id();
    }
  }
}

TEST(UpdateMaps, PermutationEquivariance) {
  std::mt19937_64 rng(37);
  std::vector<std::unique_ptr<UpdateMap>> maps;
  maps.push_back(std::make_unique<LinearAverage>());
  maps.push_back(std::make_unique<KuramotoTime1>(20));
  maps.push_back(std::make_unique<NonlinearConsensus>(GainSet::named("atan"), 20));
  maps.push_back(std::make_unique<VicsekHeading>());
  maps.push_back(std::make_unique<MaxUpdate>());
  for (const auto& map : maps) {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 5;
      const WeightedDigraph g = random_weighted(n, 0.4, rng);
      const auto perm = testing::random_permutation(n, rng);
      std::map<Arc, double> moved;
      for (const auto& [a, w] : g.weights()) moved[Arc{perm[a.from - 1], perm[a.to - 1]}] = w;
      const WeightedDigraph h(g.graph().relabeled(perm), moved, g.bounds());
      const AgentState x = random_scalar(n, rng, -1.2, 1.2);
      const AgentState direct = map->apply(0, g, x).relabeled(perm);
      const AgentState relabeled = map->apply(0, h, x.relabeled(perm));
      EXPECT_LE(max_gap(direct, relabeled), 1e-12) << map->id();
    }
  }
}

TEST(Kuramoto, AgreementIsUnchanged) {
  const AgentState x = AgentState::scalar({0.7, 0.7, 0.7});
  EXPECT_EQ(kuramoto_time1(DirectedGraph(3, {{1, 2}, {2, 3}, {3, 1}}), x), x);
}

TEST(Kuramoto, SymmetricPairContractsSymmetrically) {
  for (double a : {0.1, 1.0, 3.0, 9.0}) {
    const AgentState y = kuramoto_time1(kPair, AgentState::scalar({-a, a}));
    const double b = y(2);
    EXPECT_GT(b, 0.0);
    EXPECT_LT(b, a);
    EXPECT_NEAR(y(1), -b, 1e-15);
  }
}

TEST(Kuramoto, PairFromZeroOneMatchesIndependentSolution) {
  // Reference from an arbitrary-precision Taylor integration of the same field.
  constexpr double kReference = 0.392788873716198231;
  const AgentState fine = kuramoto_time1(kPair, AgentState::scalar({0, 1}), 1000);
  const AgentState finer = kuramoto_time1(kPair, AgentState::scalar({0, 1}), 10000);
  EXPECT_NEAR(fine(1), finer(1), 1e-8);
  EXPECT_NEAR(fine(1), kReference, 1e-12);
  EXPECT_NEAR(fine(2), 1.0 - kReference, 1e-12);
}

TEST(Kuramoto, StepHalvingShowsFourthOrder) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 3;
    std::vector<Arc> arcs;
    for (const Arc& a : testing::all_arcs(n)) arcs.push_back(a);
    const DirectedGraph g(n, arcs);
    const AgentState x = random_scalar(n, rng);
    const AgentState ref = kuramoto_time1(g, x, 2048);
    const double coarse = max_gap(kuramoto_time1(g, x, 8), ref);
    const double halved = max_gap(kuramoto_time1(g, x, 16), ref);
    const double ratio = coarse / halved;
    EXPECT_GE(ratio, 12.0) << "trial " << trial;
    EXPECT_LE(ratio, 20.0) << "trial " << trial;
  }
}

TEST(Kuramoto, HalvingRatiosApproachSixteen) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 3;
    const DirectedGraph g(n, testing::all_arcs(n));
    const AgentState x = random_scalar(n, rng);
    const AgentState ref = kuramoto_time1(g, x, 4096);
    double previous = 1e300;
    for (int s : {4, 8, 16, 32}) {
      const double ratio = max_gap(kuramoto_time1(g, x, s), ref) / max_gap(kuramoto_time1(g, x, 2 * s), ref);
      EXPECT_LT(std::abs(ratio - 16.0), std::abs(previous - 16.0)) << "trial " << trial << " substeps " << s;
      previous = ratio;
    }
    EXPECT_NEAR(previous, 16.0, 1.0) << "trial " << trial;
  }
}

TEST(Kuramoto, BidirectionalSumIsConserved) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<Arc> arcs;
    for (Node k = 1; k < n; ++k) {
      arcs.push_back({k, k + 1});
      arcs.push_back({k + 1, k});
    }
    const DirectedGraph g(n, arcs);
    AgentState x = random_scalar(n, rng, -3, 3);
    auto sum = [](const AgentState& s) {
      double t = 0.0;
      for (double v : s.coords()) t += v;
      return t;
    };
    const double s0 = sum(x);
    for (int step = 0; step < 100; ++step) x = kuramoto_time1(g, x);
    EXPECT_NEAR(sum(x), s0, 1e-9);
  }
}

TEST(Kuramoto, RejectsPlanarStatesAndBadSubsteps) {
  const std::array<double, 2> pts[] = {{0, 0}, {1, 1}};
  EXPECT_THROW(kuramoto_time1(kPair, AgentState::planar(pts)), std::invalid_argument);
  EXPECT_THROW(kuramoto_time1(kPair, AgentState::scalar({0, 1}), 0), std::invalid_argument);
  EXPECT_THROW(KuramotoTime1(0), std::invalid_argument);
}

TEST(NonlinearConsensus, IdentityGainMatchesClosedForm) {
  const GainSet identity = GainSet::named("identity");
  const AgentState y = nonlinear_consensus_time1(kPair, AgentState::scalar({0, 1}), identity);
  const double c = (1.0 - std::exp(-2.0)) / 2.0;
  EXPECT_NEAR(y(1), c, 1e-8);
  EXPECT_NEAR(y(2), 1.0 - c, 1e-8);
}

TEST(NonlinearConsensus, AgreementIsUnchanged) {
  const AgentState x = AgentState::scalar({-2, -2});
  EXPECT_EQ(nonlinear_consensus_time1(kPair, x, GainSet::named("cubic")), x);
}

TEST(NonlinearConsensus, CubicGainKeepsAntisymmetry) {
  const AgentState y = nonlinear_consensus_time1(kPair, AgentState::scalar({-1.5, 1.5}), GainSet::named("cubic"));
  EXPECT_NEAR(y(1) + y(2), 0.0, 1e-15);
  EXPECT_GT(y(2), 0.0);
  EXPECT_LT(y(2), 1.5);
}

TEST(NonlinearConsensus, PerArcGains) {
  GainSet gains = GainSet::named("identity");
  gains.set(Arc{1, 2}, [](double s) { return 3.0 * s; });
  const AgentState y = nonlinear_consensus_time1(DirectedGraph(2, {{1, 2}}), AgentState::scalar({1, 0}), gains);
  EXPECT_EQ(y(1), 1.0);
  EXPECT_NEAR(y(2), 1.0 - std::exp(-3.0), 1e-8);
}

TEST(Gains, ValidationRejectsBadGains) {
  EXPECT_THROW(GainSet([](double s) { return s * s; }), std::invalid_argument);
  EXPECT_THROW(GainSet([](double s) { return s + 1.0; }), std::invalid_argument);
  EXPECT_THROW(GainSet([](double s) { return -s; }), std::invalid_argument);
  EXPECT_THROW(GainSet([](double) { return 0.0; }), std::invalid_argument);
  EXPECT_THROW(GainSet(Gain{}), std::invalid_argument);
  EXPECT_THROW(GainSet::named("relu"), std::invalid_argument);
  GainSet ok = GainSet::named("tanh");
  EXPECT_THROW(ok.set(Arc{1, 2}, [](double s) { return std::abs(s); }), std::invalid_argument);
}

TEST(Vicsek, Examples) {
  const AgentState same = AgentState::scalar({0.4, 0.4});
  const AgentState y = vicsek_step(kPair, same);
  EXPECT_NEAR(y(1), 0.4, 1e-15);
  EXPECT_NEAR(y(2), 0.4, 1e-15);

  const AgentState cancel = vicsek_step(kPair, AgentState::scalar({-0.9, 0.9}));
  EXPECT_NEAR(cancel(1), 0.0, 1e-15);
  EXPECT_NEAR(cancel(2), 0.0, 1e-15);

  const AgentState bisect = vicsek_step(kPair, AgentState::scalar({0.0, std::numbers::pi / 4}));
  EXPECT_NEAR(bisect(1), std::numbers::pi / 8, 1e-15);
  EXPECT_NEAR(bisect(2), std::numbers::pi / 8, 1e-15);
}

TEST(Vicsek, HeadingsOutsideTheChartAreRejected) {
  const double half_pi = std::numbers::pi / 2;
  EXPECT_THROW(vicsek_step(kPair, AgentState::scalar({0.0, half_pi})), std::domain_error);
  EXPECT_THROW(vicsek_step(kPair, AgentState::scalar({-2.0, 0.0})), std::domain_error);
}

TEST(Vicsek, OutputStaysInTheChart) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const AgentState x = random_scalar(n, rng, -1.5707, 1.5707);
    const AgentState y = vicsek_step(testing::random_graph(n, 0.5, rng), x);
    for (Node k = 1; k <= n; ++k) EXPECT_LT(std::abs(y(k)), std::numbers::pi / 2);
  }
}

TEST(MaxUpdate, Examples) {
  EXPECT_EQ(max_step(kPair, AgentState::scalar({2, 2})), AgentState::scalar({2, 2}));
  EXPECT_EQ(max_step(DirectedGraph(2, {{2, 1}}), AgentState::scalar({0, 1})), AgentState::scalar({1, 1}));
  EXPECT_EQ(max_step(DirectedGraph(3), AgentState::scalar({0, 1, 2})), AgentState::scalar({0, 1, 2}));
}

TEST(MakeUpdateMap, KnownNames) {
  EXPECT_EQ(make_update_map("linear")->id(), "linear");
  EXPECT_EQ(make_update_map("linear-unit")->id(), "linear-unit");
  EXPECT_EQ(make_update_map("kuramoto")->id(), "kuramoto");
  EXPECT_EQ(make_update_map("nonlinear", 50, "tanh")->id(), "nonlinear-tanh");
  EXPECT_EQ(make_update_map("vicsek")->id(), "vicsek");
  EXPECT_FALSE(make_update_map("max")->conforming());
  EXPECT_THROW(make_update_map("gossip"), std::invalid_argument);
}

TEST(LinearAverage, UnitWeightsIgnoreTheGraphWeights) {
  const WeightedDigraph g = four_node_example();
  const AgentState x = AgentState::scalar({0, 1, 1, 1});
  EXPECT_NEAR(LinearAverage(false).apply(0, g, x)(1), 1.0 / 3, 1e-15);
  EXPECT_NEAR(LinearAverage(true).apply(0, g, x)(1), 0.5, 1e-15);
}

}  // namespace
}  // namespace consensus_lab
