#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace consensus_lab {

/// Node (agent) label. Labels run 1..n everywhere, including file formats.
using Node = int;

/// Discrete time index.
using Time = std::int64_t;

/// Arc from `from` to `to`: agent `from` is visible to agent `to`.
struct Arc {
  Node from = 0;
  Node to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

using NodeSet = std::set<Node>;

/// Communication pattern at one instant: n nodes and an arc set without
/// self-loops. Immutable after construction.
class DirectedGraph {
 public:
  /// Throws std::invalid_argument on n < 1, a self-loop, or a label outside 1..n.
  /// Duplicate arcs collapse.
  explicit DirectedGraph(int n, std::span<const Arc> arcs = {});
  DirectedGraph(int n, std::initializer_list<Arc> arcs);

  int size() const { return n_; }
  const std::set<Arc>& arcs() const { return arcs_; }
  bool has_arc(Node from, Node to) const { return arcs_.contains(Arc{from, to}); }
  bool empty() const { return arcs_.empty(); }

  /// Nodes i with an arc (i, k), ascending. These are the agents whose states
  /// agent k reads.
  std::span<const Node> sources_of(Node k) const;
  /// Nodes l with an arc (k, l), ascending.
  std::span<const Node> targets_of(Node k) const;

  /// Same graph with node k renamed to perm[k-1]. perm must be a permutation of 1..n.
  DirectedGraph relabeled(std::span<const Node> perm) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  void check_node(Node k) const;

  int n_;
  std::set<Arc> arcs_;
  std::vector<std::vector<Node>> sources_;
  std::vector<std::vector<Node>> targets_;
};

/// Closed interval [start, end] of times, or [start, inf) when end is empty.
struct IntervalSpec {
  Time start = 0;
  std::optional<Time> end;

  static IntervalSpec bounded(Time start, Time end);
  static IntervalSpec tail(Time start) { return IntervalSpec{start, std::nullopt}; }

  bool is_bounded() const { return end.has_value(); }
};

/// Nodes outside L having an arc into L. Throws std::invalid_argument when L is
/// empty or holds a label outside 1..n.
NodeSet neighbors(const NodeSet& L, const DirectedGraph& g);

/// True iff every other node is reachable from k along arc orientation.
bool is_connected_from(const DirectedGraph& g, Node k);

/// True iff some node is connected to all others.
bool is_weakly_connected(const DirectedGraph& g);

/// Largest n accepted by weakly_connected_oracle.
inline constexpr int kOracleMaxNodes = 12;

/// Exhaustive characterization: true iff every ordered pair of nonempty
/// disjoint node sets has at least one nonempty neighbor set. Enumerates all
/// 3^n assignments; throws ResourceLimitError above kOracleMaxNodes.
bool weakly_connected_oracle(const DirectedGraph& g);

/// A pair of nonempty disjoint node sets, both without neighbors.
struct IsolatedPair {
  NodeSet first;
  NodeSet second;
};

/// First witness found by the exhaustive enumeration, or nullopt when the graph
/// is weakly connected. Same size limit as weakly_connected_oracle.
std::optional<IsolatedPair> find_isolated_pair(const DirectedGraph& g);

/// Constructive root search that grows two disjoint "rooted" families
/// F1 ⊇ L1 and F2 ⊇ L2 by repeatedly pulling in a neighbor of L2 (or of L1
/// when L2 has none). Every node of L_j reaches every node of F_j throughout.
/// Returns a root when the graph is weakly connected, nullopt otherwise.
/// Ties are broken toward the lowest label.
std::optional<Node> find_root(const DirectedGraph& g);

/// True iff (k,l) ∈ arcs implies (l,k) ∈ arcs.
bool is_bidirectional(const DirectedGraph& g);

}  // namespace consensus_lab
