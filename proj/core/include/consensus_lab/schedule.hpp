#pragma once

#include <functional>
#include <string>
#include <vector>

#include "consensus_lab/graph.hpp"
#include "consensus_lab/weighted_digraph.hpp"

namespace consensus_lab {

/// Time-indexed sequence of communication graphs, defined for every
/// t >= first_time().
///
///  - finite:    an explicit list; the last graph persists after the list ends
///               (eventually constant).
///  - periodic:  an explicit list repeated forever, period = list length.
///  - generated: a pure function of t. Unbounded unions are not decidable.
class GraphSchedule {
 public:
  enum class Kind { finite, periodic, generated };
  using Generator = std::function<WeightedDigraph(Time)>;

  static GraphSchedule constant(WeightedDigraph g, Time first_time = 0, std::string id = "constant");
  static GraphSchedule finite(std::vector<WeightedDigraph> graphs, Time first_time = 0, std::string id = "finite");
  static GraphSchedule periodic(std::vector<WeightedDigraph> graphs, Time first_time = 0,
                                std::string id = "periodic");
  /// `gen` must be reentrant and return graphs on `n` nodes.
  static GraphSchedule generated(int n, Generator gen, Time first_time = 0, std::string id = "generated");

  Kind kind() const { return kind_; }
  Time first_time() const { return first_time_; }
  int size() const { return n_; }
  const std::string& id() const { return id_; }

  /// Explicit list for finite and periodic schedules; empty for generated ones.
  const std::vector<WeightedDigraph>& graphs() const { return graphs_; }
  /// Period of a periodic schedule; 0 otherwise.
  std::size_t period() const { return kind_ == Kind::periodic ? graphs_.size() : 0; }

  /// Throws std::invalid_argument for t < first_time().
  WeightedDigraph weighted_at(Time t) const;
  DirectedGraph at(Time t) const { return weighted_at(t).graph(); }

 private:
  GraphSchedule(Kind kind, int n, std::vector<WeightedDigraph> graphs, Generator gen, Time first_time,
                std::string id);

  Kind kind_;
  int n_;
  std::vector<WeightedDigraph> graphs_;
  Generator gen_;
  Time first_time_;
  std::string id_;
};

/// Graph on the schedule's nodes whose arc set is the union of all arc sets
/// over `interval`. Unbounded intervals are accepted for periodic and finite
/// schedules only (UnsupportedQuery otherwise). std::invalid_argument when the
/// interval starts before the schedule does.
DirectedGraph union_across(const GraphSchedule& schedule, const IntervalSpec& interval);

bool is_weakly_connected_across(const GraphSchedule& schedule, const IntervalSpec& interval);

}  // namespace consensus_lab
