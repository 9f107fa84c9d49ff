#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace consensus_lab::cli {

/// Reduced fraction with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Best continued-fraction convergent of v with denominator <= max_den, if it
/// reproduces v to within a few ulps.
std::optional<Rational> to_rational(double v, std::int64_t max_den = 1'000'000);

/// Exact arithmetic; nullopt on 64-bit overflow or division by zero.
std::optional<Rational> add(Rational a, Rational b);
std::optional<Rational> divide(Rational a, Rational b);

/// "p/q", or "p" when q = 1.
std::string to_string(Rational r);

}  // namespace consensus_lab::cli
