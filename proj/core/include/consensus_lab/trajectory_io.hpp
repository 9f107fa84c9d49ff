#pragma once

#include <ostream>
#include <span>
#include <string>

#include "consensus_lab/monitor.hpp"
#include "consensus_lab/simulator.hpp"

namespace consensus_lab {

/// Header `t,x1,...,xn[,y1,...,yn],diameter,contained,vertices`, one row per
/// stored state, numbers with 17 significant digits. `records` must come from
/// monitor_trajectory(traj).
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, std::span<const MonitorRecord> records);

/// JSON object with `samples`, `converged_fraction`, `start_times` and a
/// `per_sample` array.
std::string probe_report_json(const ProbeReport& report, int indent = 2);

/// "%.17g" formatting used by every numeric output.
std::string format_number(double v);

}  // namespace consensus_lab
