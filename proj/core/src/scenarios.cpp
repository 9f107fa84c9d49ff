#include "consensus_lab/scenarios.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "consensus_lab/errors.hpp"
#include "consensus_lab/simulator.hpp"
#include "consensus_lab/update_map.hpp"

namespace consensus_lab {

DirectedGraph counterexample_arc_set(char which) {
  switch (which) {
    case 'a': return DirectedGraph(3, {{1, 2}});
    case 'b': return DirectedGraph(3, {{1, 2}, {2, 1}});
    case 'c': return DirectedGraph(3, {{3, 2}});
    case 'd': return DirectedGraph(3, {{2, 3}, {3, 2}});
  }
  throw std::invalid_argument(std::string("unknown counterexample arc set '") + which + "'");
}

Time counterexample_block_start(std::int64_t s) {
  if (s < 0) throw std::invalid_argument("block index must be non-negative");
  return 1 + 2 * s * s + s;
}

namespace {

char counterexample_label(Time t) {
  const Time offset = t - 1;
  auto s = static_cast<std::int64_t>((std::sqrt(1.0 + 8.0 * static_cast<double>(offset)) - 1.0) / 4.0);
  while (s > 0 && counterexample_block_start(s) - 1 > offset) --s;
  while (counterexample_block_start(s + 1) - 1 <= offset) ++s;
  const Time r = offset - (counterexample_block_start(s) - 1);
  if (r < 2 * s) return 'a';
  if (r == 2 * s) return 'b';
  if (r <= 4 * s + 1) return 'c';
  return 'd';
}

}  // namespace

GraphSchedule counterexample_schedule() {
  const WeightedDigraph sets[4] = {
      WeightedDigraph::unit(counterexample_arc_set('a')), WeightedDigraph::unit(counterexample_arc_set('b')),
      WeightedDigraph::unit(counterexample_arc_set('c')), WeightedDigraph::unit(counterexample_arc_set('d'))};
  return GraphSchedule::generated(
      3, [sets](Time t) { return sets[counterexample_label(t) - 'a']; }, 1, "counterexample");
}

std::vector<Time> counterexample_sample_times(int p_max) {
  if (p_max < 1) throw std::invalid_argument("p_max must be >= 1");
  std::vector<Time> t{2};
  for (int p = 1; p < p_max; ++p) t.push_back(t.back() + p + 1);
  return t;
}

double counterexample_tolerance(int p) { return p <= 20 ? 1e-12 : 1e-9; }

CounterexampleReport verify_counterexample(int p_max) {
  if (p_max < 2) throw std::invalid_argument("verify_counterexample needs p_max >= 2");
  const auto times = counterexample_sample_times(p_max);
  const GraphSchedule schedule = counterexample_schedule();
  const LinearAverage map(true);
  const Trajectory traj = simulate(schedule, map, AgentState::scalar({0.0, 1.0, 1.0}), 1, times.back() - 1);

  CounterexampleReport report;
  double previous = 0.0;
  for (int p = 1; p <= p_max; ++p) {
    const Time t = times[p - 1];
    const AgentState& x = traj.state_at(t);
    CounterexampleRow row;
    row.p = p;
    row.t = t;
    row.v = x(3) - x(1);
    if (p == 1) {
      row.predicted = 0.5;
    } else {
      const double scale = std::ldexp(1.0, p);  // 2^p, the recursion step from p-1 to p
      row.predicted = previous * (scale - 1.0) / scale;
    }
    row.residual = std::abs(row.v - row.predicted);
    row.tolerance = counterexample_tolerance(p);
    if (!(row.residual < row.tolerance) && !report.first_failure) report.first_failure = p;
    previous = row.v;
    report.rows.push_back(row);
  }
  report.final_v = report.rows.back().v;
  report.limit_lower_bound = report.final_v * (1.0 - std::ldexp(1.0, -p_max));
  return report;
}

namespace {

std::uint64_t subseed(std::uint64_t seed, std::uint64_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), 0x5eedu};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<WeightedArc> random_arborescence(int n, std::mt19937_64& rng, std::uniform_real_distribution<double>& w) {
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<WeightedArc> arcs;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    arcs.push_back(WeightedArc{Arc{order[parent(rng)], order[i]}, w(rng)});
  }
  return arcs;
}

}  // namespace

GraphSchedule random_windowed_schedule(int n, int T, int length, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("windowed schedule needs n >= 2");
  if (T < 0) throw std::invalid_argument("window parameter T must be >= 0");
  if (length < 1) throw std::invalid_argument("schedule length must be >= 1");
  constexpr WeightBounds kBounds{0.5, 2.0};
  constexpr double kExtraArcProbability = 0.1;

  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(subseed(seed, attempt));
    std::uniform_real_distribution<double> weight(kBounds.min, kBounds.max);
    std::bernoulli_distribution extra(kExtraArcProbability);
    std::uniform_int_distribution<int> gap(1, T + 1);

    std::vector<std::map<Arc, double>> arcs(static_cast<std::size_t>(length));
    for (int pos = 0; pos < length; pos += gap(rng))
      for (const auto& wa : random_arborescence(n, rng, weight)) arcs[pos][wa.arc] = wa.weight;
    for (auto& g : arcs)
      for (Node k = 1; k <= n; ++k)
        for (Node l = 1; l <= n; ++l)
          if (k != l && extra(rng)) g.emplace(Arc{k, l}, weight(rng));

    std::vector<WeightedDigraph> graphs;
    graphs.reserve(arcs.size());
    for (const auto& m : arcs) {
      std::vector<WeightedArc> list;
      for (const auto& [a, w] : m) list.push_back(WeightedArc{a, w});
      graphs.push_back(WeightedDigraph::from_arcs(n, list, kBounds));
    }
    std::string id = "windowed:n=" + std::to_string(n) + ",T=" + std::to_string(T) + ",seed=" +
                     std::to_string(seed) + ",length=" + std::to_string(length);
    GraphSchedule schedule = GraphSchedule::periodic(std::move(graphs), 0, std::move(id));

    bool valid = true;
    for (Time start = 0; start < length && valid; ++start)
      valid = is_weakly_connected_across(schedule, IntervalSpec::bounded(start, start + T));
    if (valid) return schedule;
  }
  throw InternalError("random_windowed_schedule: no valid schedule after 16 attempts");
}

Time stretching_active_time(std::int64_t g) {
  if (g < 1) throw std::invalid_argument("active step index must be >= 1");
  return (g - 1) * (g + 2) / 2;
}

IntervalSpec stretching_idle_window(Time T) {
  if (T < 0) throw std::invalid_argument("window parameter must be >= 0");
  // Active step T+1 is followed by T+1 idle graphs.
  const Time start = stretching_active_time(T + 1) + 1;
  return IntervalSpec::bounded(start, start + T);
}

GraphSchedule stretching_bidirectional_schedule(int n) {
  if (n < 2) throw std::invalid_argument("stretching schedule needs n >= 2");
  std::vector<WeightedDigraph> edges;
  for (Node j = 1; j < n; ++j) edges.push_back(WeightedDigraph::unit(DirectedGraph(n, {{j, j + 1}, {j + 1, j}})));
  const WeightedDigraph idle = WeightedDigraph::unit(DirectedGraph(n));
  auto gen = [edges, idle](Time t) {
    auto g = static_cast<std::int64_t>((std::sqrt(9.0 + 8.0 * static_cast<double>(t)) - 1.0) / 2.0);
    g = std::max<std::int64_t>(g, 1);
    while (g > 1 && stretching_active_time(g) > t) --g;
    while (stretching_active_time(g + 1) <= t) ++g;
    if (stretching_active_time(g) != t) return idle;
    return edges[static_cast<std::size_t>((g - 1) % static_cast<std::int64_t>(edges.size()))];
  };
  return GraphSchedule::generated(n, std::move(gen), 0, "stretching:n=" + std::to_string(n));
}

SplitSchedule split_schedule(int n, Time W, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("split schedule needs n >= 3");
  if (W < 1) throw std::invalid_argument("split schedule needs W >= 1");
  const int a = (n - 1) / 2;
  NodeSet first, second;
  for (Node k = 1; k <= a; ++k) first.insert(k);
  for (Node k = a + 1; k <= 2 * a; ++k) second.insert(k);

  auto group = [&](Node k) { return first.contains(k) ? 1 : second.contains(k) ? 2 : 0; };
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.4);
  std::vector<WeightedDigraph> graphs;
  graphs.reserve(static_cast<std::size_t>(W));
  for (Time t = 0; t < W; ++t) {
    std::vector<Arc> arcs;
    for (Node k = 1; k <= n; ++k)
      for (Node l = 1; l <= n; ++l) {
        if (k == l) continue;
        // Members of the two frozen sets only listen inside their own set.
        const bool allowed = group(l) == 0 || group(k) == group(l);
        if (allowed && coin(rng)) arcs.push_back(Arc{k, l});
      }
    graphs.push_back(WeightedDigraph::unit(DirectedGraph(n, arcs)));
  }
  std::string id = "split:n=" + std::to_string(n) + ",W=" + std::to_string(W) + ",seed=" + std::to_string(seed);
  return SplitSchedule{GraphSchedule::finite(std::move(graphs), 0, std::move(id)), first, second};
}

namespace {

std::map<std::string, long long, std::less<>> parse_params(std::string_view body, std::string_view spec) {
  std::map<std::string, long long, std::less<>> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("scenario parameter without '=' in '" + std::string(spec) + "'");
    long long v = 0;
    const std::string_view val = item.substr(eq + 1);
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size())
      throw std::invalid_argument("scenario parameter '" + std::string(item) + "' is not an integer");
    out[std::string(item.substr(0, eq))] = v;
  }
  return out;
}

long long require(const std::map<std::string, long long, std::less<>>& params, std::string_view key,
                  std::string_view spec) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("scenario '" + std::string(spec) + "' is missing parameter '" + std::string(key) + "'");
  return it->second;
}

}  // namespace

GraphSchedule make_scenario(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const auto params = parse_params(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1), spec);
  auto only = [&](std::initializer_list<std::string_view> keys) {
    for (const auto& [k, v] : params)
      if (std::find(keys.begin(), keys.end(), k) == keys.end())
        throw std::invalid_argument("scenario '" + std::string(name) + "' has no parameter '" + k + "'");
  };

  if (name == "counterexample") {
    only({});
    return counterexample_schedule();
  }
  if (name == "windowed") {
    only({"n", "T", "seed", "length"});
    const auto T = require(params, "T", spec);
    const auto it = params.find("length");
    const long long length = it != params.end() ? it->second : 8 * (T + 1);
    return random_windowed_schedule(static_cast<int>(require(params, "n", spec)), static_cast<int>(T),
                                    static_cast<int>(length), static_cast<std::uint64_t>(require(params, "seed", spec)));
  }
  if (name == "stretching") {
    only({"n"});
    return stretching_bidirectional_schedule(static_cast<int>(require(params, "n", spec)));
  }
  if (name == "split") {
    only({"n", "W", "seed"});
    return split_schedule(static_cast<int>(require(params, "n", spec)), require(params, "W", spec),
                          static_cast<std::uint64_t>(require(params, "seed", spec)))
        .schedule;
  }
  throw std::invalid_argument("unknown scenario '" + std::string(spec) +
                              "' (counterexample | windowed:n=,T=,seed=[,length=] | stretching:n= | split:n=,W=,seed=)");
}

}  // namespace consensus_lab
