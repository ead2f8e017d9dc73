#include "hlag/rational.hpp"

#include <cmath>

namespace hlag {

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> recognize_rational(double x, long long max_denominator, double tolerance) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    if (std::abs(a) > 1e15) break;
    const auto ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0;
    const long long q2 = ai * q1 + q0;
    if (q2 > max_denominator) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) <= tolerance) {
      return Rational(p1, q1);
    }
    const double frac = rest - a;
    if (frac < 1e-18) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace hlag
