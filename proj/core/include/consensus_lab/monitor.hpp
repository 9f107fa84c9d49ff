#pragma once

#include <span>
#include <vector>

#include "consensus_lab/hull.hpp"
#include "consensus_lab/trajectory.hpp"

namespace consensus_lab {

/// Default absolute slack for hull containment checks.
inline constexpr double kContainmentSlack = 1e-9;

/// Diagnostics for one stored state of a trajectory.
///
/// `contained` says the hull at time t lies inside the hull of the previous
/// stored state (true for the first record). `self_contained` says every agent
/// point lies in the hull it generates. Together they are the two conditions
/// the hull-valued Lyapunov function must meet along a solution.
struct MonitorRecord {
  Time t = 0;
  double diameter = 0.0;
  bool contained = true;
  bool self_contained = true;
  int vertex_count = 1;

  bool ok() const { return contained && self_contained; }
};

/// One record per stored state. Violations are recorded, never thrown.
/// std::invalid_argument for trajectories with fewer than two stored states.
std::vector<MonitorRecord> monitor_trajectory(const Trajectory& traj, double slack = kContainmentSlack);

int count_violations(std::span<const MonitorRecord> records);

/// μ(hull at t0) − μ(hull at t0 + window): the diameter decrease one
/// trajectory achieves over one window. std::invalid_argument if the window
/// leaves the trajectory or window < 1.
double decrease_over_window(const Trajectory& traj, Time t0, Time window);

}  // namespace consensus_lab
