#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "consensus_lab/agent_state.hpp"
#include "consensus_lab/stochastic_matrix.hpp"
#include "consensus_lab/weighted_digraph.hpp"

namespace consensus_lab {

/// Substeps per unit time of the fixed-step RK4 integrator behind the time-1 maps.
inline constexpr int kDefaultSubsteps = 100;

/// Coupling function γ for the nonlinear consensus protocol. Must be odd,
/// strictly increasing and reentrant.
using Gain = std::function<double(double)>;

/// Samples γ on a symmetric grid and throws std::invalid_argument if it is not
/// odd or not strictly increasing there.
void validate_gain(const Gain& gain, std::string_view label);

/// One gain per arc, with a default for arcs that have no explicit entry.
/// Every gain is validated when it is added.
class GainSet {
 public:
  explicit GainSet(Gain default_gain, std::string name = "custom");

  /// Known names: identity, cubic (s^3), tanh, atan.
  static GainSet named(std::string_view name);

  GainSet& set(Arc arc, Gain gain);
  const Gain& for_arc(Arc arc) const;
  const std::string& name() const { return name_; }

 private:
  Gain default_;
  std::map<Arc, Gain> per_arc_;
  std::string name_;
};

/// Box from which random scalar test states are drawn.
struct StateBox {
  double lo = -10.0;
  double hi = 10.0;
};

/// One-step rule x(t+1) = f(t, x(t)) driven by the communication graph at t.
/// Implementations are pure and safe to call concurrently.
class UpdateMap {
 public:
  virtual ~UpdateMap() = default;

  virtual AgentState apply(Time t, const WeightedDigraph& g, const AgentState& x) const = 0;
  virtual std::string id() const = 0;

  /// False for maps that are known to violate strict convexity (max update).
  virtual bool conforming() const { return true; }
  /// Absolute tolerance when comparing outputs that should agree: zero for
  /// maps that are exact in floating point, nonzero for integrator-backed or
  /// transcendental ones.
  virtual double comparison_tolerance() const { return 0.0; }
  /// Where random scalar test states should be drawn from.
  virtual StateBox sample_box() const { return {}; }
  virtual bool supports_dim(int d) const { return d == 1; }
};

/// x(t+1) = A(G(t)) x(t). With `unit_weights` the graph's weights are ignored
/// and every arc counts 1.
class LinearAverage final : public UpdateMap {
 public:
  explicit LinearAverage(bool unit_weights = false) : unit_weights_(unit_weights) {}
  AgentState apply(Time t, const WeightedDigraph& g, const AgentState& x) const override;
  std::string id() const override { return unit_weights_ ? "linear-unit" : "linear"; }
  bool supports_dim(int d) const override { return d == 1 || d == 2; }

 private:
  bool unit_weights_;
};

/// Time-1 map of the Kuramoto model in tangent chart coordinates.
class KuramotoTime1 final : public UpdateMap {
 public:
  explicit KuramotoTime1(int substeps = kDefaultSubsteps);
  AgentState apply(Time t, const WeightedDigraph& g, const AgentState& x) const override;
  std::string id() const override { return "kuramoto"; }
  double comparison_tolerance() const override { return 1e-12; }

 private:
  int substeps_;
};

/// Time-1 map of ẋ_k = Σ γ_ik(x_i − x_k).
class NonlinearConsensus final : public UpdateMap {
 public:
  explicit NonlinearConsensus(GainSet gains, int substeps = kDefaultSubsteps);
  AgentState apply(Time t, const WeightedDigraph& g, const AgentState& x) const override;
  std::string id() const override { return "nonlinear-" + gains_.name(); }
  double comparison_tolerance() const override { return 1e-12; }
  /// Fixed-step RK4 goes unstable for the cubic gain on wider boxes.
  StateBox sample_box() const override { return {-2.0, 2.0}; }

 private:
  GainSet gains_;
  int substeps_;
};

/// Heading update: each agent adopts the mean direction of its closed
/// neighborhood. States are headings in (−π/2, π/2).
class VicsekHeading final : public UpdateMap {
 public:
  AgentState apply(Time t, const WeightedDigraph& g, const AgentState& x) const override;
  std::string id() const override { return "vicsek"; }
  /// atan(tan θ) is only θ up to rounding.
  double comparison_tolerance() const override { return 1e-12; }
  StateBox sample_box() const override { return {-1.5, 1.5}; }
};

/// x_k(t+1) = max over the closed neighborhood. Keeps the hull in one
/// dimension but lands on its boundary, so strict convexity fails.
class MaxUpdate final : public UpdateMap {
 public:
  AgentState apply(Time t, const WeightedDigraph& g, const AgentState& x) const override;
  std::string id() const override { return "max"; }
  bool conforming() const override { return false; }
  bool supports_dim(int d) const override { return d == 1 || d == 2; }
};

/// Builds a map from its CLI name: linear, linear-unit, kuramoto, nonlinear,
/// vicsek, max. `gain` is only used by nonlinear.
std::unique_ptr<UpdateMap> make_update_map(std::string_view name, int substeps = kDefaultSubsteps,
                                           std::string_view gain = "identity");

// Step functions behind the maps. All validate dimensions with
// std::invalid_argument.

/// RK4 time-1 map of ẋ_k = Σ_{i∈N(k)} (x_i − x_k) / (√(1+x_i²) √(1+x_k²)).
AgentState kuramoto_time1(const DirectedGraph& g, const AgentState& x, int substeps = kDefaultSubsteps);

/// RK4 time-1 map of ẋ_k = Σ_{i∈N(k)} γ_ik(x_i − x_k).
AgentState nonlinear_consensus_time1(const DirectedGraph& g, const AgentState& x, const GainSet& gains,
                                     int substeps = kDefaultSubsteps);

/// θ'_k = arctan(Σ sin θ_i / Σ cos θ_i) over {k} ∪ N(k). Throws
/// std::domain_error for headings outside (−π/2, π/2).
AgentState vicsek_step(const DirectedGraph& g, const AgentState& headings);

/// Coordinate-wise max over {k} ∪ N(k).
AgentState max_step(const DirectedGraph& g, const AgentState& x);

}  // namespace consensus_lab
