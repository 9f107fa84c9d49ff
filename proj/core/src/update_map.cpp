#include "consensus_lab/update_map.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rk4.hpp"

namespace consensus_lab {

void validate_gain(const Gain& gain, std::string_view label) {
  if (!gain) throw std::invalid_argument("gain '" + std::string(label) + "' is empty");
  constexpr int kGrid = 400;
  constexpr double kRange = 10.0;
  double prev = gain(-kRange);
  for (int j = 0; j <= kGrid; ++j) {
    const double s = -kRange + 2.0 * kRange * j / kGrid;
    const double v = gain(s);
    const double mirror = gain(-s);
    if (!std::isfinite(v) || std::abs(v + mirror) > 1e-12 * std::max(1.0, std::abs(v))) {
      std::ostringstream os;
      os << "gain '" << label << "' is not odd: g(" << s << ")=" << v << ", g(" << -s << ")=" << mirror;
      throw std::invalid_argument(os.str());
    }
    if (j > 0 && !(v > prev)) {
      std::ostringstream os;
      os << "gain '" << label << "' is not strictly increasing near s=" << s;
      throw std::invalid_argument(os.str());
    }
    prev = v;
  }
}

GainSet::GainSet(Gain default_gain, std::string name) : default_(std::move(default_gain)), name_(std::move(name)) {
  validate_gain(default_, name_);
}

GainSet GainSet::named(std::string_view name) {
  if (name == "identity") return GainSet([](double s) { return s; }, "identity");
  if (name == "cubic") return GainSet([](double s) { return s * s * s; }, "cubic");
  if (name == "tanh") return GainSet([](double s) { return std::tanh(s); }, "tanh");
  if (name == "atan") return GainSet([](double s) { return std::atan(s); }, "atan");
  throw std::invalid_argument("unknown gain '" + std::string(name) + "' (identity, cubic, tanh, atan)");
}

GainSet& GainSet::set(Arc arc, Gain gain) {
  std::ostringstream label;
  label << name_ << "(" << arc.from << "," << arc.to << ")";
  validate_gain(gain, label.str());
  per_arc_[arc] = std::move(gain);
  return *this;
}

const Gain& GainSet::for_arc(Arc arc) const {
  auto it = per_arc_.find(arc);
  return it == per_arc_.end() ? default_ : it->second;
}

namespace {

void require_scalar(const AgentState& x, const char* what) {
  if (x.dim() != 1) throw std::invalid_argument(std::string(what) + " needs scalar (d=1) states");
}

void require_size(const DirectedGraph& g, const AgentState& x) {
  if (g.size() != x.size())
    throw std::invalid_argument("graph has " + std::to_string(g.size()) + " nodes but state has " +
                                std::to_string(x.size()) + " agents");
}

void require_substeps(int substeps) {
  if (substeps < 1) throw std::invalid_argument("substeps must be >= 1");
}

}  // namespace

AgentState kuramoto_time1(const DirectedGraph& g, const AgentState& x, int substeps) {
  require_scalar(x, "kuramoto_time1");
  require_size(g, x);
  require_substeps(substeps);
  const int n = g.size();
  std::vector<double> scale(n);
  auto field = [&](const std::vector<double>& s, std::vector<double>& ds) {
    for (int k = 0; k < n; ++k) scale[k] = std::sqrt(1.0 + s[k] * s[k]);
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (Node i : g.sources_of(k + 1)) acc += (s[i - 1] - s[k]) / (scale[i - 1] * scale[k]);
      ds[k] = acc;
    }
  };
  std::vector<double> start(x.coords().begin(), x.coords().end());
  return AgentState::scalar(detail::rk4_time1(field, std::move(start), substeps));
}

AgentState nonlinear_consensus_time1(const DirectedGraph& g, const AgentState& x, const GainSet& gains,
                                     int substeps) {
  require_scalar(x, "nonlinear_consensus_time1");
  require_size(g, x);
  require_substeps(substeps);
  const int n = g.size();
  // Resolve gains once; the field is evaluated 4 * substeps times.
  std::vector<std::vector<std::pair<int, const Gain*>>> inputs(n);
  for (Node k = 1; k <= n; ++k)
    for (Node i : g.sources_of(k)) inputs[k - 1].emplace_back(i - 1, &gains.for_arc(Arc{i, k}));
  auto field = [&](const std::vector<double>& s, std::vector<double>& ds) {
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (const auto& [i, gamma] : inputs[k]) acc += (*gamma)(s[i] - s[k]);
      ds[k] = acc;
    }
  };
  std::vector<double> start(x.coords().begin(), x.coords().end());
  return AgentState::scalar(detail::rk4_time1(field, std::move(start), substeps));
}

AgentState vicsek_step(const DirectedGraph& g, const AgentState& headings) {
  require_scalar(headings, "vicsek_step");
  require_size(g, headings);
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  const int n = g.size();
  for (Node k = 1; k <= n; ++k) {
    const double th = headings(k);
    if (!(th > -kHalfPi && th < kHalfPi)) {
      std::ostringstream os;
      os << "heading of agent " << k << " is " << th << ", outside (-pi/2, pi/2)";
      throw std::domain_error(os.str());
    }
  }
  std::vector<double> out(n);
  for (Node k = 1; k <= n; ++k) {
    double s = std::sin(headings(k));
    double c = std::cos(headings(k));
    for (Node i : g.sources_of(k)) {
      s += std::sin(headings(i));
      c += std::cos(headings(i));
    }
    // Every cosine is positive on the chart, so c > 0 and the principal
    // branch is the right one.
    out[k - 1] = std::atan(s / c);
  }
  return AgentState::scalar(std::move(out));
}

AgentState max_step(const DirectedGraph& g, const AgentState& x) {
  require_size(g, x);
  std::vector<double> out(x.coords().begin(), x.coords().end());
  const int d = x.dim();
  for (Node k = 1; k <= g.size(); ++k) {
    for (int c = 0; c < d; ++c) {
      double m = x(k, c);
      for (Node i : g.sources_of(k)) m = std::max(m, x(i, c));
      out[static_cast<std::size_t>(k - 1) * d + c] = m;
    }
  }
  return AgentState(d, std::move(out));
}

AgentState LinearAverage::apply(Time, const WeightedDigraph& g, const AgentState& x) const {
  return linear_step(build_update_matrix(unit_weights_ ? g.with_unit_weights() : g), x);
}

KuramotoTime1::KuramotoTime1(int substeps) : substeps_(substeps) { require_substeps(substeps); }

AgentState KuramotoTime1::apply(Time, const WeightedDigraph& g, const AgentState& x) const {
  return kuramoto_time1(g.graph(), x, substeps_);
}

NonlinearConsensus::NonlinearConsensus(GainSet gains, int substeps) : gains_(std::move(gains)), substeps_(substeps) {
  require_substeps(substeps);
}

AgentState NonlinearConsensus::apply(Time, const WeightedDigraph& g, const AgentState& x) const {
  return nonlinear_consensus_time1(g.graph(), x, gains_, substeps_);
}

AgentState VicsekHeading::apply(Time, const WeightedDigraph& g, const AgentState& x) const {
  return vicsek_step(g.graph(), x);
}

AgentState MaxUpdate::apply(Time, const WeightedDigraph& g, const AgentState& x) const {
  return max_step(g.graph(), x);
}

std::unique_ptr<UpdateMap> make_update_map(std::string_view name, int substeps, std::string_view gain) {
  if (name == "linear") return std::make_unique<LinearAverage>(false);
  if (name == "linear-unit") return std::make_unique<LinearAverage>(true);
  if (name == "kuramoto") return std::make_unique<KuramotoTime1>(substeps);
  if (name == "nonlinear") return std::make_unique<NonlinearConsensus>(GainSet::named(gain), substeps);
  if (name == "vicsek") return std::make_unique<VicsekHeading>();
  if (name == "max") return std::make_unique<MaxUpdate>();
  throw std::invalid_argument("unknown map '" + std::string(name) +
                              "' (linear, linear-unit, kuramoto, nonlinear, vicsek, max)");
}

}  // namespace consensus_lab
