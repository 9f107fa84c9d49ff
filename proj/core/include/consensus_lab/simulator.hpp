#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "consensus_lab/schedule.hpp"
#include "consensus_lab/trajectory.hpp"
#include "consensus_lab/update_map.hpp"

namespace consensus_lab {

struct SimulateOptions {
  /// Beyond this many states only a regular subsample (and the final state)
  /// is stored; disagreement is kept for every step regardless.
  std::size_t max_stored_states = 1'000'000;
  /// Called with every state, including the initial one.
  std::function<void(Time, const AgentState&)> observer;
};

/// Iterates x(t+1) = map(t, schedule(t), x(t)) for t0 <= t < t0 + steps.
/// Throws std::invalid_argument when t0 precedes the schedule, steps < 1, the
/// state size differs from the schedule, or the map rejects the dimension.
Trajectory simulate(const GraphSchedule& schedule, const UpdateMap& map, const AgentState& x0, Time t0, Time steps,
                    const SimulateOptions& options = {});

/// Diameter of the hull of the agent points.
double disagreement(const AgentState& x);

/// First time with disagreement below tol; nullopt if never. tol must be > 0.
std::optional<Time> detect_consensus(const Trajectory& traj, double tol);

enum class ProbeVerdict { converged, undetermined, not_converged };
const char* to_string(ProbeVerdict v);

struct ProbeSample {
  Time start_time = 0;
  AgentState initial;
  double final_disagreement = 0.0;
  /// Per agent: largest distance from its initial point over the run.
  std::vector<double> max_excursion;
  std::optional<Time> consensus_time;
  ProbeVerdict verdict = ProbeVerdict::not_converged;
};

struct ProbeReport {
  int samples = 0;
  double converged_fraction = 0.0;
  std::vector<Time> start_times;
  std::vector<ProbeSample> per_sample;
};

struct ProbeOptions {
  AgentState center;
  /// Each agent starts uniformly within this distance of its center point.
  double radius = 1.0;
  int samples = 16;
  /// Start times to test; empty means the schedule's first time only. Every
  /// start time gets `samples` runs.
  std::vector<Time> start_times;
  Time horizon = 1000;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  /// Worker threads for independent samples.
  int jobs = 1;
};

/// Empirical stability/attractivity probe: simulates from random initial
/// states around `center` and summarizes convergence and boundedness. A run
/// that misses `tol` is "undetermined" if its disagreement still dropped by
/// more than 1e-3 (relative) over the last decade of the horizon, and
/// "not_converged" otherwise. The report is independent of `jobs`.
ProbeReport attractivity_probe(const GraphSchedule& schedule, const UpdateMap& map, const ProbeOptions& options);

}  // namespace consensus_lab
