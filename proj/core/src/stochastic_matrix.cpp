#include "consensus_lab/stochastic_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace consensus_lab {

StochasticMatrix::StochasticMatrix(int n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 1 || entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("stochastic matrix needs n*n entries");
  for (Node k = 1; k <= n_; ++k) {
    double sum = 0.0;
    for (Node l = 1; l <= n_; ++l) {
      const double v = (*this)(k, l);
      if (!(v >= 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << "entry (" << k << "," << l << ") = " << v << " is not a finite non-negative number";
        throw std::invalid_argument(os.str());
      }
      sum += v;
    }
    if (!((*this)(k, k) > 0.0)) throw std::invalid_argument("diagonal entry " + std::to_string(k) + " must be positive");
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "row " << k << " sums to " << sum;
      throw std::invalid_argument(os.str());
    }
  }
}

StochasticMatrix StochasticMatrix::identity(int n) {
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k) * n + k] = 1.0;
  return StochasticMatrix(n, std::move(e));
}

StochasticMatrix build_update_matrix(const WeightedDigraph& g) {
  const int n = g.size();
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (Node k = 1; k <= n; ++k) {
    double denom = 1.0;
    for (Node i : g.graph().sources_of(k)) denom += g.weight(i, k);
    const std::size_t row = static_cast<std::size_t>(k - 1) * n;
    e[row + (k - 1)] = 1.0 / denom;
    for (Node l : g.graph().sources_of(k)) e[row + (l - 1)] = g.weight(l, k) / denom;
  }
  return StochasticMatrix(n, std::move(e));
}

AgentState linear_step(const StochasticMatrix& m, const AgentState& x) {
  const int n = x.size();
  if (m.size() != n)
    throw std::invalid_argument("matrix is " + std::to_string(m.size()) + "x" + std::to_string(m.size()) +
                                " but state has " + std::to_string(n) + " agents");
  std::vector<double> out(x.coords().begin(), x.coords().end());
  const int d = x.dim();
  for (Node k = 1; k <= n; ++k) {
    for (int c = 0; c < d; ++c) {
      const double own = x(k, c);
      double delta = 0.0;
      for (Node l = 1; l <= n; ++l) {
        if (l == k) continue;
        const double w = m(k, l);
        if (w != 0.0) delta += w * (x(l, c) - own);
      }
      out[static_cast<std::size_t>(k - 1) * d + c] = own + delta;
    }
  }
  return AgentState(d, std::move(out));
}

}  // namespace consensus_lab
