#include "consensus_lab/trajectory_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace consensus_lab {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, std::span<const MonitorRecord> records) {
  if (records.size() != traj.states.size()) throw std::invalid_argument("one monitor record per stored state expected");
  const int n = traj.states.front().size();
  const int d = traj.states.front().dim();
  out << "t";
  for (int k = 1; k <= n; ++k) out << ",x" << k;
  if (d == 2)
    for (int k = 1; k <= n; ++k) out << ",y" << k;
  out << ",diameter,contained,vertices\n";
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const AgentState& x = traj.states[i];
    out << traj.times[i];
    for (int c = 0; c < d; ++c)
      for (Node k = 1; k <= n; ++k) out << ',' << format_number(x(k, c));
    const MonitorRecord& r = records[i];
    out << ',' << format_number(r.diameter) << ',' << (r.ok() ? "true" : "false") << ',' << r.vertex_count << '\n';
  }
}

std::string probe_report_json(const ProbeReport& report, int indent) {
  nlohmann::json j;
  j["samples"] = report.samples;
  j["converged_fraction"] = report.converged_fraction;
  j["start_times"] = report.start_times;
  auto& arr = j["per_sample"] = nlohmann::json::array();
  for (const auto& s : report.per_sample) {
    nlohmann::json e;
    e["start_time"] = s.start_time;
    e["initial"] = std::vector<double>(s.initial.coords().begin(), s.initial.coords().end());
    e["final_disagreement"] = s.final_disagreement;
    e["max_excursion"] = s.max_excursion;
    e["consensus_time"] = s.consensus_time ? nlohmann::json(*s.consensus_time) : nlohmann::json(nullptr);
    e["verdict"] = to_string(s.verdict);
    arr.push_back(std::move(e));
  }
  return j.dump(indent);
}

}  // namespace consensus_lab
