#include "rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace consensus_lab::cli {

namespace {

std::optional<Rational> make(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min())
      return std::nullopt;
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

}  // namespace

std::optional<Rational> to_rational(double v, std::int64_t max_den) {
  if (!std::isfinite(v) || std::abs(v) > 1e12 || max_den < 1) return std::nullopt;
  const double tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(v));
  const bool negative = v < 0;
  double r = std::abs(v);
  std::int64_t p_prev = 0, q_prev = 1, p = 1, q = 0;
  for (int i = 0; i < 64; ++i) {
    const double a = std::floor(r);
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p_next = ai * p + p_prev;
    const std::int64_t q_next = ai * q + q_prev;
    if (q_next > max_den) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    if (std::abs(static_cast<double>(p) / static_cast<double>(q) - std::abs(v)) <= tol)
      return make(negative ? -p : p, q);
    const double frac = r - a;
    if (frac <= 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<Rational> add(Rational a, Rational b) {
  std::int64_t x, y, den;
  if (__builtin_mul_overflow(a.num, b.den, &x) || __builtin_mul_overflow(b.num, a.den, &y) ||
      __builtin_mul_overflow(a.den, b.den, &den) || __builtin_add_overflow(x, y, &x))
    return std::nullopt;
  return make(x, den);
}

std::optional<Rational> divide(Rational a, Rational b) {
  std::int64_t num, den;
  if (b.num == 0 || __builtin_mul_overflow(a.num, b.den, &num) || __builtin_mul_overflow(a.den, b.num, &den))
    return std::nullopt;
  return make(num, den);
}

std::string to_string(Rational r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace consensus_lab::cli
