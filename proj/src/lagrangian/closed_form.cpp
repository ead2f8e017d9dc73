#include <charconv>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hlag/error.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

std::vector<double> blocks(std::initializer_list<std::pair<std::size_t, Real>> parts) {
  std::vector<double> w;
  for (const auto& [count, weight] : parts) w.insert(w.end(), count, weight.convert_to<double>());
  return w;
}

}  // namespace

ClosedForm closed_form(std::string_view name, int r) {
  ClosedForm cf;
  cf.name = std::string(name);
  if (name == "K4-") {
    // 1 carries a, the other three b = (1 - a) / 3; a * 3b^2 peaks at a = 1/3.
    cf.graph = complete_minus(4, 3);
    cf.exact = Rational(4, 81);
    cf.value = to_double(*cf.exact);
    cf.expression = "4/81";
    cf.weights = blocks({{1, Real(1) / 3}, {3, Real(2) / 9}});
    return cf;
  }
  if (name == "K6-") {
    // a on {1,2,3}, b = 1/3 - a on {4,5,6}.
    const Real a = (3 - sqrt(Real(6))) / 3;
    const Real value = 4 * sqrt(Real(6)) / 9 - 1;
    cf.graph = complete_minus(6, 3);
    cf.value = value.convert_to<double>();
    cf.expression = "4*sqrt(6)/9 - 1";
    cf.weights = blocks({{3, a}, {3, Real(1) / 3 - a}});
    return cf;
  }
  if (name == "K8-") {
    // a on {1..5}, b = (1 - 5a)/3 on {6,7,8}.
    const Real a = (4 - sqrt(Real(13))) / 3;
    const Real value = (130 * sqrt(Real(13)) - 460) / 81;
    cf.graph = complete_minus(8, 3);
    cf.value = value.convert_to<double>();
    cf.expression = "(130*sqrt(13) - 460)/81";
    cf.weights = blocks({{5, a}, {3, (1 - 5 * a) / 3}});
    return cf;
  }
  if (name == "F3-completion") {
    // x on {1,2,3}, y on {4..9} with x = (1 - 6y)/3.
    const Real y = (sqrt(Real(873)) - 15) / 162;
    const Real value = (97 * sqrt(Real(97)) - 503) / 4374;
    cf.graph = named("F3-completion");
    cf.value = value.convert_to<double>();
    cf.expression = "(97*sqrt(97) - 503)/4374";
    cf.weights = blocks({{3, (1 - 6 * y) / 3}, {6, y}});
    return cf;
  }
  if (name.size() > 1 && name[0] == 'K') {
    int t = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), t);
    if (ec == std::errc{} && ptr == name.data() + name.size() && t >= r && r >= 1) {
      cf.graph = complete(t, r);
      Rational denominator = 1;
      for (int k = 0; k < r; ++k) denominator *= t;
      cf.exact = Rational(binomial(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(r))) / denominator;
      cf.value = to_double(*cf.exact);
      cf.expression = "C(" + std::to_string(t) + "," + std::to_string(r) + ")/" + std::to_string(t) + "^" + std::to_string(r);
      cf.weights.assign(static_cast<std::size_t>(t), 1.0 / t);
      return cf;
    }
  }
  throw ValidationError("unknown closed form '" + std::string(name) + "'");
}

}  // namespace hlag
