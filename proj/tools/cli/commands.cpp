#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "consensus_lab/errors.hpp"
#include "consensus_lab/graph_io.hpp"
#include "consensus_lab/monitor.hpp"
#include "consensus_lab/scenarios.hpp"
#include "consensus_lab/simulator.hpp"
#include "consensus_lab/stochastic_matrix.hpp"
#include "consensus_lab/trajectory_io.hpp"
#include "rational.hpp"

namespace consensus_lab::cli {

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t end = text.find_first_of(", \t\r\n", i);
    const std::string_view token = text.substr(i, end == std::string_view::npos ? text.size() - i : end - i);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("'" + std::string(token) + "' is not a number");
    out.push_back(v);
    i += token.size();
  }
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("CONSENSUS_LAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string_view s(env);
  std::uint64_t seed = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("CONSENSUS_LAB_SEED='" + std::string(s) + "' is not an unsigned integer");
  return seed;
}

std::string matrix_report(const WeightedDigraph& g) {
  const int n = g.size();
  const StochasticMatrix m = build_update_matrix(g);
  std::ostringstream os;
  os << "n=" << n << "\ndecimal:\n";
  for (Node k = 1; k <= n; ++k) {
    for (Node l = 1; l <= n; ++l) os << (l > 1 ? " " : "") << format_number(m(k, l));
    os << '\n';
  }

  // Exact rows: entry (k, l) is w_lk / (1 + Σ_i w_ik), diagonal 1 / (1 + Σ_i w_ik).
  std::vector<std::optional<Rational>> exact(static_cast<std::size_t>(n) * n);
  bool ok = true;
  for (Node k = 1; k <= n && ok; ++k) {
    std::optional<Rational> total = Rational{1, 1};
    std::vector<std::pair<Node, Rational>> row;
    for (Node i : g.graph().sources_of(k)) {
      auto w = to_rational(g.weight(i, k));
      if (!w || !total) {
        ok = false;
        break;
      }
      row.emplace_back(i, *w);
      total = add(*total, *w);
    }
    if (!ok || !total) {
      ok = false;
      break;
    }
    auto at = [&](Node l) -> std::optional<Rational>& { return exact[static_cast<std::size_t>(k - 1) * n + (l - 1)]; };
    for (Node l = 1; l <= n; ++l) at(l) = Rational{0, 1};
    at(k) = divide(Rational{1, 1}, *total);
    for (const auto& [i, w] : row) at(i) = divide(w, *total);
    for (Node l = 1; l <= n; ++l) ok = ok && at(l).has_value();
  }
  if (!ok) {
    os << "rational: unavailable\n";
    return os.str();
  }
  os << "rational:\n";
  for (Node k = 1; k <= n; ++k) {
    for (Node l = 1; l <= n; ++l)
      os << (l > 1 ? " " : "") << to_string(*exact[static_cast<std::size_t>(k - 1) * n + (l - 1)]);
    os << '\n';
  }
  return os.str();
}

namespace {

struct Source {
  std::string graph;
  std::string scenario;
};

void add_source_options(CLI::App* sub, Source& src, bool positional) {
  auto* g = sub->add_option(positional ? "graph,--graph" : "--graph", src.graph, "Graph or schedule file");
  auto* s = sub->add_option("--scenario", src.scenario,
                            "Built-in schedule: counterexample | windowed:n=,T=,seed=[,length=] | stretching:n= | "
                            "split:n=,W=,seed=");
  g->excludes(s);
}

GraphSchedule load_schedule(const Source& src) {
  if (!src.scenario.empty()) return make_scenario(src.scenario);
  if (src.graph.empty()) throw std::invalid_argument("one of --graph or --scenario is required");
  return read_graph_file(src.graph).schedule(src.graph);
}

AgentState initial_state(const std::string& inline_list, const std::string& file, int dim, int n,
                         std::uint64_t seed) {
  std::vector<double> values;
  if (!inline_list.empty() && !file.empty()) throw std::invalid_argument("give --x0 or --x0-file, not both");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read initial state file '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    values = parse_number_list(buf.str());
  } else if (!inline_list.empty()) {
    values = parse_number_list(inline_list);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    values.resize(static_cast<std::size_t>(n) * dim);
    for (double& v : values) v = u(rng);
    return AgentState(dim, std::move(values));
  }
  if (values.size() != static_cast<std::size_t>(n) * dim)
    throw std::invalid_argument("initial state has " + std::to_string(values.size()) + " numbers, expected " +
                                std::to_string(n * dim) + " (n=" + std::to_string(n) + ", d=" + std::to_string(dim) +
                                ")");
  return AgentState(dim, std::move(values));
}

std::ostream* open_output(const std::string& path, std::ofstream& file, std::ostream& out) {
  if (path == "-") return &out;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  return &file;
}

struct SimulateArgs {
  Source source;
  std::string map = "linear";
  int substeps = kDefaultSubsteps;
  std::string gain = "identity";
  std::string x0;
  std::string x0_file;
  int dim = 1;
  std::optional<Time> t0;
  Time steps = 100;
  double tol = 1e-6;
  std::optional<std::uint64_t> seed;
  std::string csv = "trajectory.csv";
  std::string summary = "summary.json";
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const GraphSchedule schedule = load_schedule(a.source);
  const auto map = make_update_map(a.map, a.substeps, a.gain);
  const std::uint64_t seed = a.seed.value_or(default_seed());
  const AgentState x0 = initial_state(a.x0, a.x0_file, a.dim, schedule.size(), seed);
  const Time t0 = a.t0.value_or(schedule.first_time());
  if (!(a.tol > 0.0)) throw std::invalid_argument("--tol must be > 0");

  const Trajectory traj = simulate(schedule, *map, x0, t0, a.steps);
  const auto records = monitor_trajectory(traj);
  const int violations = count_violations(records);
  const auto consensus = detect_consensus(traj, a.tol);

  if (!a.csv.empty()) {
    std::ofstream file;
    std::ostream* os = open_output(a.csv, file, out);
    write_trajectory_csv(*os, traj, records);
  }
  nlohmann::ordered_json j;
  j["map"] = traj.map_id;
  j["schedule"] = traj.schedule_id;
  j["seed"] = seed;
  j["t0"] = traj.t0;
  j["steps"] = a.steps;
  j["final_time"] = traj.final_time();
  j["final_disagreement"] = traj.disagreement.back();
  j["tol"] = a.tol;
  j["consensus_time"] = consensus ? nlohmann::ordered_json(*consensus) : nlohmann::ordered_json(nullptr);
  j["monitor_violations"] = violations;
  const std::string text = j.dump(2) + "\n";
  if (!a.summary.empty() && a.summary != "-") {
    std::ofstream file(a.summary);
    if (!file) throw std::runtime_error("cannot write '" + a.summary + "'");
    file << text;
  }
  if (a.csv != "-") out << text;

  if (violations > 0) {
    err << "monitor: " << violations << " hull containment violation(s)\n";
    return kVerificationFailure;
  }
  return kOk;
}

struct ConnectivityArgs {
  Source source;
  std::optional<Time> from;
  std::optional<Time> to;
};

int cmd_connectivity(const ConnectivityArgs& a, std::ostream& out, std::ostream& err) {
  const GraphSchedule schedule = load_schedule(a.source);
  std::optional<IntervalSpec> interval;
  if (a.from) {
    interval = a.to ? IntervalSpec::bounded(*a.from, *a.to) : IntervalSpec::tail(*a.from);
  } else if (a.to) {
    throw std::invalid_argument("--to needs --from");
  } else if (schedule.kind() == GraphSchedule::Kind::generated) {
    throw std::invalid_argument("scenario schedules need an interval (--from [--to])");
  } else {
    interval = IntervalSpec::bounded(schedule.first_time(),
                                     schedule.first_time() + static_cast<Time>(schedule.graphs().size()) - 1);
  }
  const DirectedGraph g = union_across(schedule, *interval);
  const bool connected = is_weakly_connected(g);
  const auto root = find_root(g);
  out << "weakly_connected=" << (connected ? "true" : "false")
      << " root=" << (root ? std::to_string(*root) : std::string("none"))
      << " bidirectional=" << (is_bidirectional(g) ? "true" : "false");
  bool mismatch = root.has_value() != connected || (root && !is_connected_from(g, *root));
  if (g.size() <= 7) {
    const bool oracle = weakly_connected_oracle(g);
    out << " oracle=" << (oracle ? "true" : "false");
    mismatch = mismatch || oracle != connected;
  }
  out << '\n';
  if (mismatch) {
    err << "connectivity: root search and oracle disagree\n";
    return kVerificationFailure;
  }
  return kOk;
}

int cmd_counterexample(int p_max, std::ostream& out, std::ostream& err) {
  if (p_max < 2) throw std::invalid_argument("--p-max must be >= 2");
  const CounterexampleReport report = verify_counterexample(p_max);
  out << "p,t_p,v,residual,tolerance\n";
  for (const auto& r : report.rows)
    out << r.p << ',' << r.t << ',' << format_number(r.v) << ',' << format_number(r.residual) << ','
        << format_number(r.tolerance) << '\n';
  out << "final_v=" << format_number(report.final_v)
      << " limit_lower_bound=" << format_number(report.limit_lower_bound) << '\n';
  if (!report.ok()) {
    err << "counterexample: recursion mismatch first at p=" << *report.first_failure << '\n';
    return kVerificationFailure;
  }
  return kOk;
}

int cmd_matrix(const std::string& path, std::ostream& out) {
  if (path.empty()) throw std::invalid_argument("a graph file is required");
  out << matrix_report(read_graph_file(path).single());
  return kOk;
}

struct ProbeArgs {
  Source source;
  std::string map = "linear";
  int substeps = kDefaultSubsteps;
  std::string gain = "identity";
  std::string center;
  int dim = 1;
  double radius = 1.0;
  int samples = 16;
  std::string start_times;
  Time horizon = 1000;
  double tol = 1e-6;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string output = "-";
};

int cmd_probe(const ProbeArgs& a, std::ostream& out) {
  const GraphSchedule schedule = load_schedule(a.source);
  const auto map = make_update_map(a.map, a.substeps, a.gain);
  ProbeOptions opt;
  const int n = schedule.size();
  if (a.center.empty()) {
    opt.center = AgentState(a.dim, std::vector<double>(static_cast<std::size_t>(n) * a.dim, 0.0));
  } else {
    opt.center = initial_state(a.center, "", a.dim, n, 0);
  }
  opt.radius = a.radius;
  opt.samples = a.samples;
  for (double t : parse_number_list(a.start_times)) {
    if (t != static_cast<double>(static_cast<Time>(t))) throw std::invalid_argument("start times must be integers");
    opt.start_times.push_back(static_cast<Time>(t));
  }
  opt.horizon = a.horizon;
  opt.tol = a.tol;
  opt.seed = a.seed.value_or(default_seed());
  if (a.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
  opt.jobs = a.jobs;
  const std::string text = probe_report_json(attractivity_probe(schedule, *map, opt)) + "\n";
  std::ofstream file;
  *open_output(a.output, file, out) << text;
  return kOk;
}

void add_map_options(CLI::App* sub, std::string& map, int& substeps, std::string& gain) {
  sub->add_option("--map", map, "linear | linear-unit | kuramoto | nonlinear | vicsek | max")->capture_default_str();
  sub->add_option("--substeps", substeps, "RK4 substeps per time-1 map")->capture_default_str()->check(
      CLI::PositiveNumber);
  sub->add_option("--gain", gain, "Gain for the nonlinear map: identity | cubic | tanh | atan")
      ->capture_default_str();
}

// Splices config entries in right after the subcommand so that explicit
// flags, which come later, take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args, CLI::App& app) {
  std::vector<std::string> rest;
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file");
      config_path = args[++i];
    } else if (args[i].starts_with("--config=")) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return rest;

  auto sub_pos = std::find_if(rest.begin(), rest.end(), [&](const std::string& a) {
    return !a.starts_with("-") && app.get_subcommand_no_throw(a) != nullptr;
  });
  if (sub_pos == rest.end()) throw CLI::RequiredError("a subcommand is required with --config");
  CLI::App* sub = app.get_subcommand(*sub_pos);

  std::vector<std::string> injected;
  for (const auto& e : read_config_file(config_path)) {
    if (sub->get_option_no_throw("--" + e.key) == nullptr)
      throw ParseError(e.line, "unknown key '" + e.key + "' for " + sub->get_name(), config_path);
    injected.push_back("--" + e.key);
    injected.push_back(e.value);
  }
  rest.insert(sub_pos + 1, injected.begin(), injected.end());
  return rest;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consensus dynamics on time-varying communication graphs", "consensus_lab"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", "consensus_lab 0.1.0");
  std::string config_unused;
  app.add_option("--config", config_unused, "key=value defaults; explicit flags win");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run one trajectory; write CSV and JSON summary");
  add_source_options(s, sim.source, false);
  add_map_options(s, sim.map, sim.substeps, sim.gain);
  s->add_option("--x0", sim.x0, "Initial state, e.g. 0,1,1 (planar: x1,y1,x2,y2,...); random in [0,1] if absent");
  s->add_option("--x0-file", sim.x0_file, "File holding the initial state numbers");
  s->add_option("--dim", sim.dim, "State dimension")->check(CLI::IsMember({1, 2}))->capture_default_str();
  s->add_option("--t0", sim.t0, "Start time (default: schedule start)");
  s->add_option("--steps", sim.steps, "Number of steps")->capture_default_str();
  s->add_option("--tol", sim.tol, "Consensus tolerance")->capture_default_str();
  s->add_option("--seed", sim.seed, "Seed for the random initial state (default: $CONSENSUS_LAB_SEED or 0)");
  s->add_option("--csv", sim.csv, "Trajectory CSV path, '-' for stdout, '' to skip")->capture_default_str();
  s->add_option("--summary", sim.summary, "JSON summary path, '' to skip")->capture_default_str();

  ConnectivityArgs con;
  auto* c = app.add_subcommand("connectivity", "Weak connectivity of a graph or of a schedule across an interval");
  add_source_options(c, con.source, true);
  c->add_option("--from", con.from, "Interval start");
  c->add_option("--to", con.to, "Interval end (inclusive); omit for the whole tail");

  int p_max = 10;
  auto* x = app.add_subcommand("counterexample", "Verify the non-convergence recursion on three agents");
  x->add_option("--p-max", p_max, "Number of sample times")->capture_default_str();

  std::string matrix_path;
  auto* m = app.add_subcommand("matrix", "Print the averaging matrix of a weighted graph file");
  m->add_option("graph,--graph", matrix_path, "Weighted graph file");

  ProbeArgs pr;
  auto* p = app.add_subcommand("probe", "Empirical attractivity probe from random initial states");
  add_source_options(p, pr.source, false);
  add_map_options(p, pr.map, pr.substeps, pr.gain);
  p->add_option("--center", pr.center, "Center state (default: all zeros)");
  p->add_option("--dim", pr.dim, "State dimension")->check(CLI::IsMember({1, 2}))->capture_default_str();
  p->add_option("--radius", pr.radius, "Sampling radius around the center")->capture_default_str();
  p->add_option("--samples", pr.samples, "Samples per start time")->capture_default_str();
  p->add_option("--start-times", pr.start_times, "Comma-separated start times (default: schedule start)");
  p->add_option("--horizon", pr.horizon, "Steps per sample")->capture_default_str();
  p->add_option("--tol", pr.tol, "Consensus tolerance")->capture_default_str();
  p->add_option("--seed", pr.seed, "Seed (default: $CONSENSUS_LAB_SEED or 0)");
  p->add_option("--jobs", pr.jobs, "Worker threads")->capture_default_str();
  p->add_option("--output", pr.output, "JSON report path, '-' for stdout")->capture_default_str();

  try {
    std::vector<std::string> expanded = expand_config(args, app);
    std::reverse(expanded.begin(), expanded.end());
    app.parse(expanded);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (s->parsed()) return cmd_simulate(sim, out, err);
    if (c->parsed()) return cmd_connectivity(con, out, err);
    if (x->parsed()) return cmd_counterexample(p_max, out, err);
    if (m->parsed()) return cmd_matrix(matrix_path, out);
    if (p->parsed()) return cmd_probe(pr, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace consensus_lab::cli
