#include <algorithm>
#include <random>

#include "hlag/lagrangian.hpp"
#include "hlag/simplex.hpp"

namespace hlag {

namespace {

enum Stream : std::uint64_t { kReducedStarts = 1, kFullStarts = 2, kCertifyStarts = 3 };

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

// Uniform point of the simplex.
std::vector<double> random_point(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp(1.0);
  std::vector<double> x(n);
  double sum = 0.0;
  for (double& v : x) sum += (v = exp(rng));
  for (double& v : x) v /= sum;
  return x;
}

struct Candidate {
  std::vector<double> x;
  double value = -1.0;
};

// Tries to certify x exactly: every weight recognized as a small-denominator
// rational, unit sum, and exact first-order conditions.
bool certify_rational(const Hypergraph& g, std::span<const double> x, OptimumResult& out) {
  std::vector<Rational> q;
  q.reserve(x.size());
  for (double v : x) {
    auto r = recognize_rational(v, 10000, 1e-9);
    if (!r || *r < 0) return false;
    q.push_back(*r);
  }
  Rational sum = 0;
  for (const Rational& v : q) sum += v;
  if (sum != 1) return false;
  const Rational value = evaluate(g, std::span<const Rational>(q));
  const std::vector<Rational> grad = gradient(g, std::span<const Rational>(q));
  const Rational target = value * g.uniformity();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] > 0 ? grad[i] != target : grad[i] > target) return false;
  }
  out.value = to_double(value);
  out.exact_value = value;
  out.weighting = WeightVector::exact(std::move(q));
  out.kkt_residual = 0.0;
  out.outside_violation = 0.0;
  out.mode = OptimumMode::rational_certified;
  return true;
}

}  // namespace

std::string_view to_string(OptimumMode mode) {
  return mode == OptimumMode::rational_certified ? "rational-certified" : "float";
}

MaximizeOptions MaximizeOptions::fast() {
  MaximizeOptions o;
  o.restarts = 8;
  o.certify_restarts = 0;
  o.rational_recognition = false;
  return o;
}

OptimumResult maximize(const Hypergraph& g, const MaximizeOptions& options) {
  OptimumResult res;
  res.seed = options.seed;
  const std::size_t n = g.order();
  if (n == 0 || g.empty()) {
    res.weighting = WeightVector::uniform(n);
    for (Vertex v = 1; v <= n; ++v) res.support.push_back(v);
    res.certified = true;
    res.mode = OptimumMode::rational_certified;
    res.exact_value = Rational(0);
    return res;
  }

  const SimplexPolynomial full = SimplexPolynomial::from_hypergraph(g);
  const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
  Candidate best;
  int starts = 0;
  auto consider = [&](std::vector<double> x) {
    const double v = full.value(x);
    if (v > best.value) best = {std::move(x), v};
  };

  if (options.symmetry_reduction) {
    const VertexPartition classes = equivalence_classes(g);
    const SimplexPolynomial reduced = SimplexPolynomial::reduced(g, classes);
    const std::size_t k = classes.classes.size();
    auto expand = [&](const std::vector<double>& z) {
      std::vector<double> x(n);
      for (std::size_t c = 0; c < k; ++c) {
        for (Vertex v : classes.classes[c]) x[v - 1] = z[c] / static_cast<double>(classes.classes[c].size());
      }
      return x;
    };
    auto ascend = [&](std::vector<double> z, std::span<const char> active = {}) {
      AscentResult r = projected_gradient_ascent(reduced, std::move(z), {}, active);
      polish_stationary_point(reduced, r.x);
      ++starts;
      consider(expand(r.x));
    };

    std::vector<double> z0(k);
    for (std::size_t c = 0; c < k; ++c) z0[c] = static_cast<double>(classes.classes[c].size()) / static_cast<double>(n);
    ascend(z0);
    if (k > 1) {
      const int reduced_starts = std::min(options.restarts, 16);
      for (int i = 0; i < reduced_starts; ++i) {
        auto rng = stream_engine(options.seed, kReducedStarts, static_cast<std::uint64_t>(i));
        ascend(random_point(k, rng));
      }
    }
    if (k > 1 && k <= options.exact_support_n) {
      std::vector<char> active(k);
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<double> z(k, 0.0);
        for (std::size_t c = 0; c < k; ++c) {
          active[c] = static_cast<char>((mask >> c) & 1u);
          if (active[c]) z[c] = 1.0;
        }
        ascend(std::move(z), active);
      }
    }
  }

  {
    AscentResult r = projected_gradient_ascent(full, uniform);
    ++starts;
    consider(std::move(r.x));
  }
  for (int i = 0; i < options.restarts; ++i) {
    auto rng = stream_engine(options.seed, kFullStarts, static_cast<std::uint64_t>(i));
    AscentResult r = projected_gradient_ascent(full, random_point(n, rng));
    ++starts;
    consider(std::move(r.x));
  }
  polish_stationary_point(full, best.x);
  best.value = full.value(best.x);

  bool beaten = false;
  for (int i = 0; i < options.certify_restarts; ++i) {
    auto rng = stream_engine(options.seed, kCertifyStarts, static_cast<std::uint64_t>(i));
    AscentResult r = projected_gradient_ascent(full, random_point(n, rng));
    polish_stationary_point(full, r.x);
    ++starts;
    const double v = full.value(r.x);
    if (v > best.value + options.kkt_tol) beaten = true;
    if (v > best.value) best = {std::move(r.x), v};
  }

  res.restarts = starts;
  res.value = best.value;
  res.kkt_residual = kkt_residual(full, best.x);
  res.outside_violation = kkt_outside_violation(full, best.x);
  res.certified = !beaten && res.kkt_residual <= options.kkt_tol && res.outside_violation <= options.kkt_tol;
  if (!(res.certified && options.rational_recognition && certify_rational(g, best.x, res))) {
    // Renormalize so the float weighting passes the unit-sum check.
    double sum = 0.0;
    for (double v : best.x) sum += v;
    for (double& v : best.x) v /= sum;
    res.weighting = WeightVector::floating(best.x);
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (res.weighting[v - 1] > 0.0) res.support.push_back(v);
  }
  return res;
}

nlohmann::json to_json(const OptimumResult& result) {
  nlohmann::json j;
  j["value"] = result.value;
  j["weights"] = std::vector<double>(result.weighting.values().begin(), result.weighting.values().end());
  j["support"] = result.support;
  j["kkt_residual"] = result.kkt_residual;
  j["outside_violation"] = result.outside_violation;
  j["certified"] = result.certified;
  j["seed"] = result.seed;
  j["restarts"] = result.restarts;
  j["mode"] = std::string(to_string(result.mode));
  if (result.exact_value) {
    j["exact_value"] = to_string(*result.exact_value);
    nlohmann::json exact = nlohmann::json::array();
    for (const Rational& q : result.weighting.exact_values()) exact.push_back(to_string(q));
    j["exact_weights"] = std::move(exact);
  }
  return j;
}

}  // namespace hlag
