#include "consensus_lab/weighted_digraph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace consensus_lab {

namespace {

std::string arc_name(const Arc& a) {
  std::ostringstream os;
  os << "(" << a.from << "," << a.to << ")";
  return os.str();
}

}  // namespace

WeightedDigraph WeightedDigraph::unit(DirectedGraph g) {
  std::map<Arc, double> w;
  for (const Arc& a : g.arcs()) w.emplace(a, 1.0);
  return WeightedDigraph(std::move(g), std::move(w), WeightBounds{1.0, 1.0});
}

WeightedDigraph::WeightedDigraph(DirectedGraph g, std::map<Arc, double> weights, WeightBounds bounds)
    : graph_(std::move(g)), weights_(std::move(weights)), bounds_(bounds) {
  if (!(bounds_.min > 0.0) || !(bounds_.min <= bounds_.max) || !std::isfinite(bounds_.max)) {
    std::ostringstream os;
    os << "weight bounds must satisfy 0 < e_min <= e_max < inf, got [" << bounds_.min << ", " << bounds_.max << "]";
    throw std::invalid_argument(os.str());
  }
  for (const auto& [arc, w] : weights_) {
    if (!graph_.has_arc(arc.from, arc.to)) throw std::invalid_argument("weight given for missing arc " + arc_name(arc));
  }
  for (const Arc& a : graph_.arcs()) {
    auto it = weights_.find(a);
    if (it == weights_.end()) throw std::invalid_argument("arc " + arc_name(a) + " has no weight");
    const double w = it->second;
    if (!std::isfinite(w) || w < bounds_.min || w > bounds_.max) {
      std::ostringstream os;
      os << "weight " << w << " of arc " << arc_name(a) << " outside [" << bounds_.min << ", " << bounds_.max << "]";
      throw std::invalid_argument(os.str());
    }
  }
}

WeightedDigraph WeightedDigraph::from_arcs(int n, std::span<const WeightedArc> arcs,
                                           std::optional<WeightBounds> bounds) {
  std::vector<Arc> plain;
  std::map<Arc, double> w;
  for (const auto& wa : arcs) {
    plain.push_back(wa.arc);
    if (!w.emplace(wa.arc, wa.weight).second)
      throw std::invalid_argument("duplicate arc " + arc_name(wa.arc));
  }
  if (!bounds) {
    if (arcs.empty()) {
      bounds = WeightBounds{1.0, 1.0};
    } else {
      auto [lo, hi] = std::minmax_element(arcs.begin(), arcs.end(),
                                          [](const auto& a, const auto& b) { return a.weight < b.weight; });
      bounds = WeightBounds{lo->weight, hi->weight};
    }
  }
  return WeightedDigraph(DirectedGraph(n, plain), std::move(w), *bounds);
}

double WeightedDigraph::weight(Node from, Node to) const {
  auto it = weights_.find(Arc{from, to});
  if (it == weights_.end()) throw std::invalid_argument("no arc " + arc_name(Arc{from, to}));
  return it->second;
}

}  // namespace consensus_lab
