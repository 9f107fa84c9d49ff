#pragma once

#include <string>
#include <vector>

#include "consensus_lab/agent_state.hpp"

namespace consensus_lab {

/// Solution of x(t+1) = f(t, x(t)) from t0. States are stored for `times`
/// (every step unless the run exceeded the storage cap, in which case a
/// regular subsample plus the final state); `disagreement` always covers every
/// step, index t - t0.
struct Trajectory {
  Time t0 = 0;
  std::vector<Time> times;
  std::vector<AgentState> states;
  std::vector<double> disagreement;
  std::string map_id;
  std::string schedule_id;

  /// Wraps explicit consecutive states t0, t0+1, ... Throws
  /// std::invalid_argument when empty or when n or d changes along the way.
  static Trajectory from_states(Time t0, std::vector<AgentState> states, std::string map_id = "manual",
                                std::string schedule_id = "manual");

  Time final_time() const { return t0 + static_cast<Time>(disagreement.size()) - 1; }
  const AgentState& final_state() const { return states.back(); }
  bool every_step_stored() const { return states.size() == disagreement.size(); }

  /// Stored state at time t; std::invalid_argument if t was not stored.
  const AgentState& state_at(Time t) const;
  /// Disagreement at time t; std::invalid_argument outside the trajectory.
  double disagreement_at(Time t) const;
};

}  // namespace consensus_lab
