#include "consensus_lab/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "consensus_lab/errors.hpp"

namespace consensus_lab {

DirectedGraph::DirectedGraph(int n, std::span<const Arc> arcs)
    : n_(n), sources_(n > 0 ? n : 0), targets_(n > 0 ? n : 0) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node, got n=" + std::to_string(n));
  for (const Arc& a : arcs) {
    check_node(a.from);
    check_node(a.to);
    if (a.from == a.to)
      throw std::invalid_argument("self-loop (" + std::to_string(a.from) + "," + std::to_string(a.to) + ")");
    arcs_.insert(a);
  }
  // arcs_ is ordered by (from, to), so both adjacency lists come out sorted.
  for (const Arc& a : arcs_) {
    sources_[a.to - 1].push_back(a.from);
    targets_[a.from - 1].push_back(a.to);
  }
}

DirectedGraph::DirectedGraph(int n, std::initializer_list<Arc> arcs)
    : DirectedGraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

void DirectedGraph::check_node(Node k) const {
  if (k < 1 || k > n_)
    throw std::invalid_argument("node " + std::to_string(k) + " outside 1.." + std::to_string(n_));
}

std::span<const Node> DirectedGraph::sources_of(Node k) const {
  check_node(k);
  return sources_[k - 1];
}

std::span<const Node> DirectedGraph::targets_of(Node k) const {
  check_node(k);
  return targets_[k - 1];
}

DirectedGraph DirectedGraph::relabeled(std::span<const Node> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n_, false);
  for (Node p : perm) {
    check_node(p);
    if (seen[p - 1]) throw std::invalid_argument("not a permutation");
    seen[p - 1] = true;
  }
  std::vector<Arc> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.push_back(Arc{perm[a.from - 1], perm[a.to - 1]});
  return DirectedGraph(n_, out);
}

IntervalSpec IntervalSpec::bounded(Time start, Time end) {
  if (end < start)
    throw std::invalid_argument("interval end " + std::to_string(end) + " precedes start " + std::to_string(start));
  return IntervalSpec{start, end};
}

NodeSet neighbors(const NodeSet& L, const DirectedGraph& g) {
  if (L.empty()) throw std::invalid_argument("neighbors: node set must be nonempty");
  NodeSet out;
  for (Node l : L) {
    for (Node k : g.sources_of(l))  // validates l
      if (!L.contains(k)) out.insert(k);
  }
  return out;
}

bool is_connected_from(const DirectedGraph& g, Node k) {
  const int n = g.size();
  if (k < 1 || k > n) throw std::invalid_argument("node " + std::to_string(k) + " outside 1.." + std::to_string(n));
  std::vector<bool> seen(n, false);
  std::vector<Node> stack{k};
  seen[k - 1] = true;
  int reached = 1;
  while (!stack.empty()) {
    Node u = stack.back();
    stack.pop_back();
    for (Node v : g.targets_of(u)) {
      if (!seen[v - 1]) {
        seen[v - 1] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool is_weakly_connected(const DirectedGraph& g) {
  for (Node k = 1; k <= g.size(); ++k)
    if (is_connected_from(g, k)) return true;
  return false;
}

namespace {

NodeSet mask_to_set(std::uint32_t mask) {
  NodeSet s;
  for (Node k = 1; mask != 0; ++k, mask >>= 1)
    if (mask & 1u) s.insert(k);
  return s;
}

}  // namespace

std::optional<IsolatedPair> find_isolated_pair(const DirectedGraph& g) {
  const int n = g.size();
  if (n > kOracleMaxNodes)
    throw ResourceLimitError("exhaustive subset enumeration limited to n <= " + std::to_string(kOracleMaxNodes) +
                             ", got n=" + std::to_string(n));
  const std::uint32_t full = (1u << n) - 1u;

  // sources_union[m] = all nodes with an arc into some member of m.
  std::vector<std::uint32_t> sources_union(std::size_t{1} << n, 0u);
  for (std::uint32_t m = 1; m <= full; ++m) {
    const int low = std::countr_zero(m);
    std::uint32_t in = 0;
    for (Node s : g.sources_of(low + 1)) in |= 1u << (s - 1);
    sources_union[m] = sources_union[m & (m - 1)] | in;
  }
  auto has_neighbors = [&](std::uint32_t m) { return (sources_union[m] & ~m) != 0; };

  for (std::uint32_t first = 1; first <= full; ++first) {
    if (has_neighbors(first)) continue;
    const std::uint32_t rest = full & ~first;
    // All nonempty submasks of the complement, as ordered pairs.
    for (std::uint32_t second = rest; second != 0; second = (second - 1) & rest) {
      if (!has_neighbors(second)) return IsolatedPair{mask_to_set(first), mask_to_set(second)};
    }
  }
  return std::nullopt;
}

bool weakly_connected_oracle(const DirectedGraph& g) { return !find_isolated_pair(g).has_value(); }

std::optional<Node> find_root(const DirectedGraph& g) {
  const int n = g.size();
  if (n == 1) return 1;

  struct Family {
    NodeSet leaders;  // L_j: each reaches every member of F_j
    NodeSet members;  // F_j
  };
  Family fam[2] = {{{1}, {1}}, {{2}, {2}}};

  auto covered = [&] {
    NodeSet u = fam[0].members;
    u.insert(fam[1].members.begin(), fam[1].members.end());
    return u;
  };

  // Each iteration grows |F1 ∪ F2|, or keeps it and grows |L1 ∪ L2|, so the
  // loop ends within n^2 rounds.
  for (int round = 0; round <= n * n; ++round) {
    int own;
    NodeSet incoming = neighbors(fam[1].leaders, g);
    if (!incoming.empty()) {
      own = 1;
    } else {
      incoming = neighbors(fam[0].leaders, g);
      if (incoming.empty()) return std::nullopt;  // (L1, L2) witnesses the failure
      own = 0;
    }
    Family& mine = fam[own];
    Family& other = fam[1 - own];
    const Node m = *incoming.begin();

    if (other.members.contains(m)) {
      NodeSet all = covered();
      if (static_cast<int>(all.size()) == n) return *other.leaders.begin();
      other.members = std::move(all);
      Node fresh = 1;
      while (other.members.contains(fresh)) ++fresh;
      mine.leaders = mine.members = NodeSet{fresh};
    } else if (!mine.members.contains(m)) {
      mine.leaders = NodeSet{m};
      mine.members.insert(m);
    } else {
      // m ∈ F_own \ L_own: m reaches L_own, hence all of F_own.
      mine.leaders.insert(m);
    }
  }
  throw InternalError("find_root failed to terminate");
}

bool is_bidirectional(const DirectedGraph& g) {
  return std::all_of(g.arcs().begin(), g.arcs().end(),
                     [&](const Arc& a) { return g.has_arc(a.to, a.from); });
}

}  // namespace consensus_lab
