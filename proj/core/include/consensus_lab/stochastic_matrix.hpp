#pragma once

#include <vector>

#include "consensus_lab/agent_state.hpp"
#include "consensus_lab/weighted_digraph.hpp"

namespace consensus_lab {

/// Row-stochastic n×n matrix with a positive diagonal. Entries are addressed
/// 1-based, (k, l) meaning "weight agent k puts on agent l".
class StochasticMatrix {
 public:
  static constexpr double kRowSumTolerance = 1e-12;

  /// `entries` is row-major n×n. Throws std::invalid_argument on a negative
  /// entry, a non-positive diagonal entry or a row sum off 1 by more than
  /// kRowSumTolerance.
  StochasticMatrix(int n, std::vector<double> entries);

  static StochasticMatrix identity(int n);

  int size() const { return n_; }
  double operator()(Node k, Node l) const { return entries_[static_cast<std::size_t>(k - 1) * n_ + (l - 1)]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  int n_;
  std::vector<double> entries_;
};

/// Weighted averaging matrix of a weighted digraph: agent k keeps its own
/// state with weight 1 and each source i with weight w_ik, normalized by
/// 1 + Σ w_ik.
StochasticMatrix build_update_matrix(const WeightedDigraph& g);

/// x'_k = Σ_l M_kl x_l, applied per coordinate. Evaluated as
/// x_k + Σ_{l≠k} M_kl (x_l - x_k), which agrees in exact arithmetic and leaves
/// agreeing neighborhoods exactly fixed in floating point.
/// Throws std::invalid_argument when sizes differ.
AgentState linear_step(const StochasticMatrix& m, const AgentState& x);

}  // namespace consensus_lab
