#include "consensus_lab/assumptions.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "consensus_lab/hull.hpp"

namespace consensus_lab {

namespace {

NodeSet closed_neighborhood(const DirectedGraph& g, Node k) {
  NodeSet s{k};
  for (Node i : g.sources_of(k)) s.insert(i);
  return s;
}

AgentState random_state(std::mt19937_64& rng, int n, int dim, StateBox box) {
  std::uniform_real_distribution<double> u(box.lo, box.hi);
  std::vector<double> c(static_cast<std::size_t>(n) * dim);
  for (auto& v : c) v = u(rng);
  return AgentState(dim, std::move(c));
}

double point_gap(const AgentState& a, const AgentState& b, Node k) {
  double s = 0.0;
  for (int c = 0; c < a.dim(); ++c) s = std::max(s, std::abs(a(k, c) - b(k, c)));
  return s;
}

void record(AssumptionReport& report, AssumptionViolation v) {
  ++report.violation_count;
  for (const auto& existing : report.violations)
    if (existing.agent == v.agent) return;
  report.violations.push_back(std::move(v));
}

}  // namespace

AssumptionReport check_communication_assumption(const UpdateMap& map, const WeightedDigraph& driving,
                                                const AgentState& x, int trials, std::uint64_t seed,
                                                std::optional<DirectedGraph> neighborhoods) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const DirectedGraph& local = neighborhoods ? *neighborhoods : driving.graph();
  if (local.size() != x.size() || driving.size() != x.size())
    throw std::invalid_argument("graph and state sizes differ");

  AssumptionReport report{"communication", trials, {}, 0};
  std::mt19937_64 rng(seed);
  const StateBox box = map.sample_box();
  std::uniform_real_distribution<double> u(box.lo, box.hi);
  const AgentState base_out = map.apply(0, driving, x);
  const double tol = map.comparison_tolerance();

  for (Node k = 1; k <= x.size(); ++k) {
    const NodeSet keep = closed_neighborhood(local, k);
    if (static_cast<int>(keep.size()) == x.size()) continue;  // nothing to perturb
    for (int trial = 0; trial < trials; ++trial) {
      AgentState perturbed = x;
      for (Node j = 1; j <= x.size(); ++j) {
        if (keep.contains(j)) continue;
        for (int c = 0; c < x.dim(); ++c) perturbed(j, c) = u(rng);
      }
      const AgentState out = map.apply(0, driving, perturbed);
      const double gap = point_gap(base_out, out, k);
      if (gap > tol) {
        std::ostringstream os;
        os << "output of agent " << k << " moved by " << gap << " when only agents outside its neighborhood changed";
        record(report, AssumptionViolation{k, x, perturbed, gap, os.str()});
        break;
      }
    }
  }
  return report;
}

AssumptionReport check_strict_convexity(const UpdateMap& map, const WeightedDigraph& g, int samples,
                                        std::uint64_t seed, int dim, std::optional<StateBox> box) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!map.supports_dim(dim)) throw std::invalid_argument("map '" + map.id() + "' does not support this dimension");
  const DirectedGraph& graph = g.graph();
  const int n = graph.size();
  const StateBox range = box.value_or(map.sample_box());
  const double tol = map.comparison_tolerance();

  AssumptionReport report{"strict-convexity", samples, {}, 0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, n);

  for (int s = 0; s < samples; ++s) {
    AgentState x = random_state(rng, n, dim, range);
    if (s % 5 == 4) {
      const Node k = pick(rng);
      for (Node i : graph.sources_of(k))
        for (int c = 0; c < dim; ++c) x(i, c) = x(k, c);
    }
    const AgentState y = map.apply(0, g, x);

    for (Node k = 1; k <= n; ++k) {
      std::vector<Point2> pts;
      for (Node i : closed_neighborhood(graph, k)) pts.push_back({x(i, 0), dim == 2 ? x(i, 1) : 0.0});
      const HullPolytope local = hull_of_points(dim, pts);
      const Point2 out{y(k, 0), dim == 2 ? y(k, 1) : 0.0};

      if (local.vertices.size() == 1) {
        const double gap = std::hypot(out[0] - local.vertices[0][0], out[1] - local.vertices[0][1]);
        if (gap > tol) {
          std::ostringstream os;
          os << "agent " << k << " left a neighborhood in agreement (moved by " << gap << ")";
          record(report, AssumptionViolation{k, x, y, gap, os.str()});
        }
        continue;
      }
      const double margin = kConvexityMargin * diameter(local);
      if (!in_relative_interior(local, out, margin)) {
        std::ostringstream os;
        os.precision(17);
        os << "output of agent " << k << " (" << out[0];
        if (dim == 2) os << ", " << out[1];
        os << ") is not in the relative interior of its neighborhood hull";
        record(report, AssumptionViolation{k, x, y, distance_to_hull(local, out), os.str()});
      }
    }
  }
  return report;
}

}  // namespace consensus_lab
