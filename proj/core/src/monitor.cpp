#include "consensus_lab/monitor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace consensus_lab {

std::vector<MonitorRecord> monitor_trajectory(const Trajectory& traj, double slack) {
  if (traj.states.size() < 2) throw std::invalid_argument("monitor needs a trajectory with at least two states");
  std::vector<MonitorRecord> records;
  records.reserve(traj.states.size());
  HullPolytope previous;
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const AgentState& x = traj.states[i];
    HullPolytope current = hull(x);
    MonitorRecord r;
    r.t = traj.times[i];
    r.diameter = diameter(current);
    r.vertex_count = static_cast<int>(current.vertices.size());
    r.contained = i == 0 || contains(previous, current, slack);
    for (Node k = 1; k <= x.size() && r.self_contained; ++k) {
      const Point2 p{x(k, 0), x.dim() == 2 ? x(k, 1) : 0.0};
      r.self_contained = distance_to_hull(current, p) <= slack;
    }
    records.push_back(r);
    previous = std::move(current);
  }
  return records;
}

int count_violations(std::span<const MonitorRecord> records) {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.ok(); }));
}

double decrease_over_window(const Trajectory& traj, Time t0, Time window) {
  if (window < 1) throw std::invalid_argument("window length must be >= 1");
  if (t0 < traj.t0 || t0 + window > traj.final_time())
    throw std::invalid_argument("window [" + std::to_string(t0) + ", " + std::to_string(t0 + window) +
                                "] leaves the trajectory [" + std::to_string(traj.t0) + ", " +
                                std::to_string(traj.final_time()) + "]");
  return traj.disagreement_at(t0) - traj.disagreement_at(t0 + window);
}

}  // namespace consensus_lab
