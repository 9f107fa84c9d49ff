#pragma once

#include <vector>

namespace consensus_lab::detail {

/// Integrates ẋ = field(x) from 0 to 1 with `substeps` classical RK4 steps.
/// `field(x, dx)` writes the derivative into dx (same size as x).
template <class Field>
std::vector<double> rk4_time1(const Field& field, std::vector<double> x, int substeps) {
  const std::size_t n = x.size();
  const double h = 1.0 / substeps;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (int s = 0; s < substeps; ++s) {
    field(x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    field(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    field(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    field(tmp, k4);
    for (std::size_t i = 0; i < n; ++i) x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return x;
}

}  // namespace consensus_lab::detail
