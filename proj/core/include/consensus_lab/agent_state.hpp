#pragma once

#include <array>
#include <span>
#include <vector>

#include "consensus_lab/graph.hpp"

namespace consensus_lab {

/// n agent positions in R^d, d ∈ {1, 2}. Agents are addressed 1..n like graph
/// nodes. Coordinates are stored agent-major: (x1, y1, x2, y2, ...).
class AgentState {
 public:
  /// Throws std::invalid_argument unless d ∈ {1,2}, coords.size() is a positive
  /// multiple of d and every coordinate is finite.
  AgentState(int d, std::vector<double> coords);
  /// A single scalar agent at 0.
  AgentState() : AgentState(1, {0.0}) {}

  /// Scalar states (d = 1).
  static AgentState scalar(std::vector<double> values) { return AgentState(1, std::move(values)); }
  /// Planar states from (x, y) pairs.
  static AgentState planar(std::span<const std::array<double, 2>> points);
  /// All n agents at the same point.
  static AgentState uniform(int n, std::span<const double> point);

  int size() const { return static_cast<int>(coords_.size()) / d_; }
  int dim() const { return d_; }

  /// Coordinate c (0-based) of agent k (1-based).
  double operator()(Node k, int c = 0) const { return coords_[index(k, c)]; }
  double& operator()(Node k, int c = 0) { return coords_[index(k, c)]; }

  std::span<const double> point(Node k) const { return {coords_.data() + index(k, 0), static_cast<std::size_t>(d_)}; }
  std::span<const double> coords() const { return coords_; }

  /// Agent k of the result is agent perm^{-1}(k) of this state, i.e. agent j
  /// moves to label perm[j-1].
  AgentState relabeled(std::span<const Node> perm) const;

  friend bool operator==(const AgentState&, const AgentState&) = default;

 private:
  std::size_t index(Node k, int c) const;

  int d_;
  std::vector<double> coords_;
};

}  // namespace consensus_lab
