#include "consensus_lab/schedule.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "consensus_lab/errors.hpp"

namespace consensus_lab {

GraphSchedule::GraphSchedule(Kind kind, int n, std::vector<WeightedDigraph> graphs, Generator gen, Time first_time,
                             std::string id)
    : kind_(kind), n_(n), graphs_(std::move(graphs)), gen_(std::move(gen)), first_time_(first_time),
      id_(std::move(id)) {
  if (kind_ != Kind::generated) {
    if (graphs_.empty()) throw std::invalid_argument("schedule needs at least one graph");
    n_ = graphs_.front().size();
    for (const auto& g : graphs_)
      if (g.size() != n_) throw std::invalid_argument("all graphs of a schedule must share the node count");
  } else {
    if (n_ < 1) throw std::invalid_argument("generated schedule needs n >= 1");
    if (!gen_) throw std::invalid_argument("generated schedule needs a generator");
  }
}

GraphSchedule GraphSchedule::constant(WeightedDigraph g, Time first_time, std::string id) {
  std::vector<WeightedDigraph> list{std::move(g)};
  return GraphSchedule(Kind::finite, 0, std::move(list), {}, first_time, std::move(id));
}

GraphSchedule GraphSchedule::finite(std::vector<WeightedDigraph> graphs, Time first_time, std::string id) {
  return GraphSchedule(Kind::finite, 0, std::move(graphs), {}, first_time, std::move(id));
}

GraphSchedule GraphSchedule::periodic(std::vector<WeightedDigraph> graphs, Time first_time, std::string id) {
  return GraphSchedule(Kind::periodic, 0, std::move(graphs), {}, first_time, std::move(id));
}

GraphSchedule GraphSchedule::generated(int n, Generator gen, Time first_time, std::string id) {
  return GraphSchedule(Kind::generated, n, {}, std::move(gen), first_time, std::move(id));
}

WeightedDigraph GraphSchedule::weighted_at(Time t) const {
  if (t < first_time_)
    throw std::invalid_argument("time " + std::to_string(t) + " precedes schedule start " +
                                std::to_string(first_time_));
  const auto offset = static_cast<std::uint64_t>(t - first_time_);
  switch (kind_) {
    case Kind::finite:
      return graphs_[std::min<std::uint64_t>(offset, graphs_.size() - 1)];
    case Kind::periodic:
      return graphs_[offset % graphs_.size()];
    case Kind::generated: {
      WeightedDigraph g = gen_(t);
      if (g.size() != n_) throw InternalError("generator for '" + id_ + "' returned a graph of the wrong size");
      return g;
    }
  }
  throw InternalError("unknown schedule kind");
}

namespace {

void add_arcs(std::set<Arc>& acc, const DirectedGraph& g) { acc.insert(g.arcs().begin(), g.arcs().end()); }

DirectedGraph make_graph(int n, const std::set<Arc>& arcs) {
  std::vector<Arc> v(arcs.begin(), arcs.end());
  return DirectedGraph(n, v);
}

}  // namespace

DirectedGraph union_across(const GraphSchedule& schedule, const IntervalSpec& interval) {
  if (interval.start < schedule.first_time())
    throw std::invalid_argument("interval starts at " + std::to_string(interval.start) + " before schedule start " +
                                std::to_string(schedule.first_time()));
  if (interval.end && *interval.end < interval.start)
    throw std::invalid_argument("interval end precedes start");

  std::set<Arc> acc;
  const int n = schedule.size();
  const auto& list = schedule.graphs();
  const Time first = schedule.first_time();

  switch (schedule.kind()) {
    case GraphSchedule::Kind::periodic: {
      const auto period = static_cast<Time>(list.size());
      if (!interval.end || *interval.end - interval.start + 1 >= period) {
        for (const auto& g : list) add_arcs(acc, g.graph());
      } else {
        for (Time t = interval.start; t <= *interval.end; ++t) add_arcs(acc, list[(t - first) % period].graph());
      }
      break;
    }
    case GraphSchedule::Kind::finite: {
      const Time last_index = static_cast<Time>(list.size()) - 1;
      const Time lo = std::min(interval.start - first, last_index);
      const Time hi = interval.end ? std::min(*interval.end - first, last_index) : last_index;
      for (Time i = lo; i <= hi; ++i) add_arcs(acc, list[i].graph());
      break;
    }
    case GraphSchedule::Kind::generated: {
      if (!interval.end)
        throw UnsupportedQuery("unbounded union over generated schedule '" + schedule.id() +
                               "' is not decidable; use a bounded interval");
      for (Time t = interval.start; t <= *interval.end; ++t) add_arcs(acc, schedule.at(t));
      break;
    }
  }
  return make_graph(n, acc);
}

bool is_weakly_connected_across(const GraphSchedule& schedule, const IntervalSpec& interval) {
  return is_weakly_connected(union_across(schedule, interval));
}

}  // namespace consensus_lab
