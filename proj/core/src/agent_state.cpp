#include "consensus_lab/agent_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace consensus_lab {

AgentState::AgentState(int d, std::vector<double> coords) : d_(d), coords_(std::move(coords)) {
  if (d_ != 1 && d_ != 2) throw std::invalid_argument("state dimension must be 1 or 2, got " + std::to_string(d_));
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(d_) != 0)
    throw std::invalid_argument("coordinate count must be a positive multiple of the dimension");
  for (double v : coords_)
    if (!std::isfinite(v)) throw std::invalid_argument("agent coordinates must be finite");
}

AgentState AgentState::planar(std::span<const std::array<double, 2>> points) {
  std::vector<double> c;
  c.reserve(points.size() * 2);
  for (const auto& p : points) {
    c.push_back(p[0]);
    c.push_back(p[1]);
  }
  return AgentState(2, std::move(c));
}

AgentState AgentState::uniform(int n, std::span<const double> point) {
  if (n < 1) throw std::invalid_argument("agent count must be positive");
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(n) * point.size());
  for (int k = 0; k < n; ++k) c.insert(c.end(), point.begin(), point.end());
  return AgentState(static_cast<int>(point.size()), std::move(c));
}

std::size_t AgentState::index(Node k, int c) const {
  if (k < 1 || k > size()) throw std::invalid_argument("agent " + std::to_string(k) + " outside 1.." + std::to_string(size()));
  if (c < 0 || c >= d_) throw std::invalid_argument("coordinate index out of range");
  return static_cast<std::size_t>(k - 1) * d_ + c;
}

AgentState AgentState::relabeled(std::span<const Node> perm) const {
  if (static_cast<int>(perm.size()) != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<double> out(coords_.size());
  for (Node j = 1; j <= size(); ++j) {
    const Node to = perm[j - 1];
    if (to < 1 || to > size()) throw std::invalid_argument("not a permutation");
    for (int c = 0; c < d_; ++c) out[static_cast<std::size_t>(to - 1) * d_ + c] = (*this)(j, c);
  }
  return AgentState(d_, std::move(out));
}

}  // namespace consensus_lab
