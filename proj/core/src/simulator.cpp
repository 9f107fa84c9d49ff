#include "consensus_lab/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "consensus_lab/hull.hpp"

namespace consensus_lab {

Trajectory Trajectory::from_states(Time t0, std::vector<AgentState> states, std::string map_id,
                                   std::string schedule_id) {
  if (states.empty()) throw std::invalid_argument("trajectory needs at least one state");
  Trajectory traj;
  traj.t0 = t0;
  traj.map_id = std::move(map_id);
  traj.schedule_id = std::move(schedule_id);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != states[0].size() || states[i].dim() != states[0].dim())
      throw std::invalid_argument("trajectory states must share agent count and dimension");
    traj.times.push_back(t0 + static_cast<Time>(i));
    traj.disagreement.push_back(consensus_lab::disagreement(states[i]));
  }
  traj.states = std::move(states);
  return traj;
}

const AgentState& Trajectory::state_at(Time t) const {
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.end() || *it != t) throw std::invalid_argument("state at time " + std::to_string(t) + " not stored");
  return states[static_cast<std::size_t>(it - times.begin())];
}

double Trajectory::disagreement_at(Time t) const {
  if (t < t0 || t > final_time()) throw std::invalid_argument("time " + std::to_string(t) + " outside trajectory");
  return disagreement[static_cast<std::size_t>(t - t0)];
}

double disagreement(const AgentState& x) { return diameter(hull(x)); }

Trajectory simulate(const GraphSchedule& schedule, const UpdateMap& map, const AgentState& x0, Time t0, Time steps,
                    const SimulateOptions& options) {
  if (t0 < schedule.first_time())
    throw std::invalid_argument("start time " + std::to_string(t0) + " precedes schedule start " +
                                std::to_string(schedule.first_time()));
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (x0.size() != schedule.size())
    throw std::invalid_argument("initial state has " + std::to_string(x0.size()) + " agents, schedule has " +
                                std::to_string(schedule.size()) + " nodes");
  if (!map.supports_dim(x0.dim()))
    throw std::invalid_argument("map '" + map.id() + "' does not support d=" + std::to_string(x0.dim()));

  const auto total = static_cast<std::uint64_t>(steps) + 1;
  const std::uint64_t cap = std::max<std::size_t>(options.max_stored_states, 2);
  // Multiples of stride plus the final state never exceed cap entries.
  const std::uint64_t slots = cap > 2 ? cap - 2 : 1;
  const std::uint64_t stride = total <= cap ? 1 : (total - 1 + slots - 1) / slots;

  Trajectory traj;
  traj.t0 = t0;
  traj.map_id = map.id();
  traj.schedule_id = schedule.id();
  traj.disagreement.reserve(static_cast<std::size_t>(total));
  traj.states.reserve(static_cast<std::size_t>(std::min(total, cap)));

  AgentState x = x0;
  for (Time t = t0;; ++t) {
    const auto i = static_cast<std::uint64_t>(t - t0);
    traj.disagreement.push_back(disagreement(x));
    if (options.observer) options.observer(t, x);
    if (i % stride == 0 || i + 1 == total) {
      traj.times.push_back(t);
      traj.states.push_back(x);
    }
    if (i + 1 == total) break;
    x = map.apply(t, schedule.weighted_at(t), x);
  }
  return traj;
}

std::optional<Time> detect_consensus(const Trajectory& traj, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("consensus tolerance must be positive");
  for (std::size_t i = 0; i < traj.disagreement.size(); ++i)
    if (traj.disagreement[i] < tol) return traj.t0 + static_cast<Time>(i);
  return std::nullopt;
}

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::converged: return "converged";
    case ProbeVerdict::undetermined: return "undetermined";
    case ProbeVerdict::not_converged: return "not_converged";
  }
  return "unknown";
}

namespace {

AgentState perturbed_start(const AgentState& center, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AgentState x = center;
  for (Node k = 1; k <= x.size(); ++k) {
    if (x.dim() == 1) {
      x(k) += radius * u(rng);
      continue;
    }
    double a = 0.0, b = 0.0;
    do {
      a = u(rng);
      b = u(rng);
    } while (a * a + b * b > 1.0);
    x(k, 0) += radius * a;
    x(k, 1) += radius * b;
  }
  return x;
}

ProbeSample run_sample(const GraphSchedule& schedule, const UpdateMap& map, const ProbeOptions& o, Time start,
                       std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  ProbeSample s;
  s.start_time = start;
  s.initial = perturbed_start(o.center, o.radius, rng);
  s.max_excursion.assign(static_cast<std::size_t>(s.initial.size()), 0.0);

  SimulateOptions sim;
  sim.max_stored_states = 2;
  sim.observer = [&](Time, const AgentState& x) {
    for (Node k = 1; k <= x.size(); ++k) {
      double d2 = 0.0;
      for (int c = 0; c < x.dim(); ++c) d2 += (x(k, c) - s.initial(k, c)) * (x(k, c) - s.initial(k, c));
      s.max_excursion[k - 1] = std::max(s.max_excursion[k - 1], std::sqrt(d2));
    }
  };
  const Trajectory traj = simulate(schedule, map, s.initial, start, o.horizon, sim);
  s.final_disagreement = traj.disagreement.back();
  s.consensus_time = detect_consensus(traj, o.tol);
  if (s.consensus_time) {
    s.verdict = ProbeVerdict::converged;
  } else {
    const double early = traj.disagreement[traj.disagreement.size() / 10];
    const bool shrinking = early > 0.0 && (early - s.final_disagreement) / early > 1e-3;
    s.verdict = shrinking ? ProbeVerdict::undetermined : ProbeVerdict::not_converged;
  }
  return s;
}

}  // namespace

ProbeReport attractivity_probe(const GraphSchedule& schedule, const UpdateMap& map, const ProbeOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("probe needs samples >= 1");
  if (!(options.radius > 0.0)) throw std::invalid_argument("probe radius must be positive");
  if (!(options.tol > 0.0)) throw std::invalid_argument("probe tolerance must be positive");
  if (options.horizon < 1) throw std::invalid_argument("probe horizon must be >= 1");

  ProbeReport report;
  report.start_times = options.start_times.empty() ? std::vector<Time>{schedule.first_time()} : options.start_times;
  const std::size_t per_start = static_cast<std::size_t>(options.samples);
  const std::size_t total = per_start * report.start_times.size();
  report.samples = static_cast<int>(total);
  report.per_sample.resize(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        report.per_sample[i] = run_sample(schedule, map, options, report.start_times[i / per_start], i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(total)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t converged = 0;
  for (const auto& s : report.per_sample)
    if (s.verdict == ProbeVerdict::converged) ++converged;
  report.converged_fraction = static_cast<double>(converged) / static_cast<double>(total);
  return report;
}

}  // namespace consensus_lab
