#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hlag {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q);

/// Best rational approximation of x with denominator <= max_denominator, accepted
/// only when it lies within `tolerance` of x.
std::optional<Rational> recognize_rational(double x, long long max_denominator = 100000,
                                           double tolerance = 1e-12);

}  // namespace hlag
