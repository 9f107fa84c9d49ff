#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>

#include "consensus_lab/graph.hpp"

namespace consensus_lab {

/// Admissible weight range [min, max], 0 < min <= max.
struct WeightBounds {
  double min = 1.0;
  double max = 1.0;
};

struct WeightedArc {
  Arc arc;
  double weight = 1.0;
};

/// A directed graph with one positive weight per arc, every weight inside
/// the declared bounds.
class WeightedDigraph {
 public:
  /// All arcs weighted 1 with bounds [1, 1].
  static WeightedDigraph unit(DirectedGraph g);

  /// Throws std::invalid_argument when bounds are not 0 < min <= max, or when a
  /// weight is missing, stray, non-finite, or outside the bounds (the message
  /// names the arc).
  WeightedDigraph(DirectedGraph g, std::map<Arc, double> weights, WeightBounds bounds);

  /// Builds the graph from the arc list. Bounds default to [min w, max w]
  /// (or [1, 1] for no arcs).
  static WeightedDigraph from_arcs(int n, std::span<const WeightedArc> arcs,
                                   std::optional<WeightBounds> bounds = std::nullopt);

  const DirectedGraph& graph() const { return graph_; }
  int size() const { return graph_.size(); }
  const WeightBounds& bounds() const { return bounds_; }
  const std::map<Arc, double>& weights() const { return weights_; }

  /// Weight of an existing arc; throws std::invalid_argument otherwise.
  double weight(Node from, Node to) const;

  /// Same weights with every arc set to 1 and bounds [1, 1].
  WeightedDigraph with_unit_weights() const { return unit(graph_); }

 private:
  DirectedGraph graph_;
  std::map<Arc, double> weights_;
  WeightBounds bounds_;
};

}  // namespace consensus_lab
