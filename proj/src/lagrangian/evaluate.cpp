#include <algorithm>
#include <cmath>
#include <string>

#include "hlag/error.hpp"
#include "hlag/lagrangian.hpp"
#include "hlag/simplex.hpp"

namespace hlag {

namespace {

template <typename T>
void check_weights(const Hypergraph& g, std::span<const T> x) {
  if (x.size() != g.order()) {
    throw ValidationError("weight vector has " + std::to_string(x.size()) + " entries, graph has " +
                          std::to_string(g.order()) + " vertices");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool bad = false;
    if constexpr (std::is_same_v<T, double>) {
      bad = !std::isfinite(x[i]) || x[i] < 0.0;
    } else {
      bad = x[i] < 0;
    }
    if (bad) throw ValidationError("weight of vertex " + std::to_string(i + 1) + " is negative or not finite");
  }
}

}  // namespace

WeightVector WeightVector::floating(std::vector<double> weights) {
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw ValidationError("weight of vertex " + std::to_string(i + 1) + " is negative or not finite");
    }
    sum += weights[i];
  }
  if (!weights.empty() && std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError("weights sum to " + std::to_string(sum) + ", not 1");
  }
  WeightVector w;
  w.values_ = std::move(weights);
  return w;
}

WeightVector WeightVector::exact(std::vector<Rational> weights) {
  Rational sum = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw ValidationError("weight of vertex " + std::to_string(i + 1) + " is negative");
    sum += weights[i];
  }
  if (!weights.empty() && sum != 1) throw ValidationError("weights sum to " + to_string(sum) + ", not 1");
  WeightVector w;
  w.values_.reserve(weights.size());
  for (const Rational& q : weights) w.values_.push_back(to_double(q));
  w.exact_ = std::move(weights);
  return w;
}

WeightVector WeightVector::uniform(std::size_t n) {
  return exact(std::vector<Rational>(n, n ? Rational(1, static_cast<long long>(n)) : Rational(0)));
}

std::span<const Rational> WeightVector::exact_values() const noexcept {
  if (!exact_) return {};
  return *exact_;
}

double evaluate(const Hypergraph& g, std::span<const double> x) {
  check_weights(g, x);
  return SimplexPolynomial::from_hypergraph(g).value(x);
}

Rational evaluate(const Hypergraph& g, std::span<const Rational> x) {
  check_weights(g, x);
  Rational sum = 0;
  for (const Edge& e : g.edges()) {
    Rational term = 1;
    for (Vertex v : e) term *= x[v - 1];
    sum += term;
  }
  return sum;
}

Number evaluate(const Hypergraph& g, const WeightVector& x) {
  if (x.is_exact()) {
    Rational q = evaluate(g, x.exact_values());
    return {to_double(q), q};
  }
  return {evaluate(g, x.values()), std::nullopt};
}

std::vector<double> gradient(const Hypergraph& g, std::span<const double> x) {
  check_weights(g, x);
  std::vector<double> out(g.order());
  SimplexPolynomial::from_hypergraph(g).gradient(x, out);
  return out;
}

std::vector<Rational> gradient(const Hypergraph& g, std::span<const Rational> x) {
  check_weights(g, x);
  std::vector<Rational> out(g.order(), Rational(0));
  for (const Edge& e : g.edges()) {
    for (Vertex v : e) {
      Rational term = 1;
      for (Vertex w : e) {
        if (w != v) term *= x[w - 1];
      }
      out[v - 1] += term;
    }
  }
  return out;
}

double lagrangian_density_lower_bound(const Hypergraph& g, const MaximizeOptions& options) {
  double factorial = 1.0;
  for (int k = 2; k <= g.uniformity(); ++k) factorial *= k;
  return factorial * maximize(g, options).value;
}

}  // namespace hlag
