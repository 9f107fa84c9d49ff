#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "consensus_lab/update_map.hpp"

namespace consensus_lab {

/// Relative margin (times the neighborhood diameter) used when deciding
/// whether a planar output lies on the affine hull of a collinear
/// neighborhood.
inline constexpr double kConvexityMargin = 1e-9;

struct AssumptionViolation {
  Node agent = 0;
  /// Input state exhibiting the violation.
  AgentState input;
  /// Communication check: the perturbed input that agrees with `input` on the
  /// agent's closed neighborhood. Convexity check: the map's output.
  AgentState witness;
  /// Size of the discrepancy: output difference (communication) or distance
  /// from the relative interior / required value (convexity).
  double discrepancy = 0.0;
  std::string detail;
};

struct AssumptionReport {
  std::string assumption;
  int trials = 0;
  /// At most one violation per agent is kept; `violation_count` counts all.
  std::vector<AssumptionViolation> violations;
  int violation_count = 0;

  bool ok() const { return violation_count == 0; }
};

/// Locality check: for each agent k, re-randomizes every agent outside
/// {k} ∪ N(k) and requires component k of the output to stay put (bit-identical
/// for closed-form maps, within map.comparison_tolerance() otherwise).
/// `map` is driven by `driving`; neighborhoods come from `neighborhoods`
/// (defaults to the driving graph's arcs).
AssumptionReport check_communication_assumption(const UpdateMap& map, const WeightedDigraph& driving,
                                                const AgentState& x, int trials, std::uint64_t seed,
                                                std::optional<DirectedGraph> neighborhoods = std::nullopt);

/// Strict convexity check on `samples` random states (dimension `dim`, drawn
/// from map.sample_box() unless `box` is given). For each agent whose closed
/// neighborhood disagrees, the output must lie in the relative interior of the
/// neighborhood hull; when the neighborhood agrees, the output must equal the
/// common value. Every fifth sample collapses one random neighborhood so both
/// branches are exercised.
AssumptionReport check_strict_convexity(const UpdateMap& map, const WeightedDigraph& g, int samples,
                                        std::uint64_t seed, int dim = 1, std::optional<StateBox> box = std::nullopt);

}  // namespace consensus_lab
