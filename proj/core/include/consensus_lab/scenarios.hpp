#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "consensus_lab/schedule.hpp"

namespace consensus_lab {

// ---------------------------------------------------------------------------
// Non-convergence counterexample on three agents.
//
// Arc sets  a = {(1,2)}   b = {(1,2),(2,1)}   c = {(3,2)}   d = {(2,3),(3,2)}
// Block B_s = 2s copies of a, then b, then 2s+1 copies of c, then d
//           (4s+3 graphs; B_0 = b, c, d).
// The schedule is B_0 B_1 B_2 ... starting at t = 1, unit weights.
// ---------------------------------------------------------------------------

/// One of the four arc sets, `which` in 'a'..'d'.
DirectedGraph counterexample_arc_set(char which);

/// First time of block B_s: 1 + 2s^2 + s.
Time counterexample_block_start(std::int64_t s);

GraphSchedule counterexample_schedule();

/// t_1 = 2, t_{p+1} = t_p + p + 1, for p = 1..p_max. Throws
/// std::invalid_argument for p_max < 1.
std::vector<Time> counterexample_sample_times(int p_max);

struct CounterexampleRow {
  int p = 0;
  Time t = 0;
  /// Simulated ζ3(t_p) − ζ1(t_p).
  double v = 0.0;
  /// 1/2 for p = 1, otherwise the recursion applied to the simulated v(p−1).
  double predicted = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct CounterexampleReport {
  std::vector<CounterexampleRow> rows;
  /// First p whose residual exceeds its tolerance.
  std::optional<int> first_failure;
  double final_v = 0.0;
  /// v(p_max)(1 − 2^{-p_max}) bounds the limit of v from below.
  double limit_lower_bound = 0.0;

  bool ok() const { return !first_failure.has_value(); }
};

/// Residual tolerance for row p: 1e-12 up to p = 20, 1e-9 beyond.
double counterexample_tolerance(int p);

/// Simulates the unit-weight linear average from ζ(1) = (0, 1, 1) and checks
/// v(p) against v(1) = 1/2 and v(p+1) = v(p)(2^{p+1} − 1)/2^{p+1}.
/// Throws std::invalid_argument for p_max < 2.
CounterexampleReport verify_counterexample(int p_max);

// ---------------------------------------------------------------------------
// Test families.
// ---------------------------------------------------------------------------

/// Periodic schedule (period `length`, first time 0) in which every window of
/// T+1 consecutive graphs, wrap-around included, is weakly connected. A random
/// spanning arborescence is planted at random gaps of at most T+1, and sparse
/// random arcs are added throughout; weights are drawn from [0.5, 2].
/// Validated after construction; a failing draw is retried with a new
/// sub-seed up to 16 times before InternalError.
GraphSchedule random_windowed_schedule(int n, int T, int length, std::uint64_t seed);

/// Bidirectional schedule on the path 1-2-...-n (first time 0): the g-th active
/// step uses edge ((g−1) mod (n−1)) + 1 in both directions and is followed by g
/// empty graphs. Every tail is connected; no window length bounds the gaps.
GraphSchedule stretching_bidirectional_schedule(int n);

/// Time of the g-th active graph (g >= 1): (g−1)(g+2)/2.
Time stretching_active_time(std::int64_t g);

/// An arc-free interval [t0, t0+T] of the stretching schedule.
IntervalSpec stretching_idle_window(Time T);

struct SplitSchedule {
  GraphSchedule schedule;
  NodeSet first;
  NodeSet second;
};

/// W random graphs (first time 0) on n >= 3 nodes. With a = ⌊(n−1)/2⌋,
/// first = {1..a} and second = {a+1..2a} only ever receive arcs from inside
/// themselves, while the remaining nodes may listen to anyone. Both sets have
/// empty neighbor sets across the whole window.
SplitSchedule split_schedule(int n, Time W, std::uint64_t seed);

/// Builds a schedule from a CLI scenario spec:
///   counterexample
///   windowed:n=<int>,T=<int>,seed=<int>[,length=<int>]   (length defaults to 8(T+1))
///   stretching:n=<int>
///   split:n=<int>,W=<int>,seed=<int>
/// Throws std::invalid_argument with a usage hint on a bad spec.
GraphSchedule make_scenario(std::string_view spec);

}  // namespace consensus_lab
