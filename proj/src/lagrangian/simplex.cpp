#include "hlag/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Dense>

#include "hlag/error.hpp"

namespace hlag {

namespace {

double ipow(double base, std::uint32_t exponent) {
  double r = 1.0;
  for (std::uint32_t k = 0; k < exponent; ++k) r *= base;
  return r;
}

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double result() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

SimplexPolynomial SimplexPolynomial::from_hypergraph(const Hypergraph& g) {
  SimplexPolynomial p(g.order(), g.uniformity());
  std::vector<Factor> f;
  for (const Edge& e : g.edges()) {
    f.clear();
    for (Vertex v : e) f.push_back({v - 1, 1});
    p.add_term(1.0, f);
  }
  return p;
}

SimplexPolynomial SimplexPolynomial::reduced(const Hypergraph& g, const VertexPartition& classes) {
  std::vector<std::uint32_t> cls(g.order(), 0);
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    for (Vertex v : classes.classes[c]) cls[v - 1] = static_cast<std::uint32_t>(c);
  }
  std::map<std::vector<std::uint32_t>, double> merged;
  for (const Edge& e : g.edges()) {
    std::vector<std::uint32_t> key;
    for (Vertex v : e) key.push_back(cls[v - 1]);
    std::sort(key.begin(), key.end());
    merged[key] += 1.0;
  }
  SimplexPolynomial p(classes.classes.size(), g.uniformity());
  std::vector<Factor> f;
  for (const auto& [key, count] : merged) {
    f.clear();
    double coefficient = count;
    for (std::size_t k = 0; k < key.size();) {
      std::size_t q = k;
      while (q < key.size() && key[q] == key[k]) ++q;
      const auto power = static_cast<std::uint32_t>(q - k);
      coefficient /= ipow(static_cast<double>(classes.classes[key[k]].size()), power);
      f.push_back({key[k], power});
      k = q;
    }
    p.add_term(coefficient, f);
  }
  return p;
}

void SimplexPolynomial::add_term(double coefficient, std::span<const Factor> factors) {
  coefficients_.push_back(coefficient);
  factors_.insert(factors_.end(), factors.begin(), factors.end());
  offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
}

double SimplexPolynomial::value(std::span<const double> x) const {
  CompensatedSum sum;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    double term = coefficients_[t];
    for (std::uint32_t k = offsets_[t]; k < offsets_[t + 1]; ++k) term *= ipow(x[factors_[k].variable], factors_[k].power);
    sum.add(term);
  }
  return sum.result();
}

void SimplexPolynomial::gradient(std::span<const double> x, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    const std::uint32_t lo = offsets_[t];
    const std::uint32_t hi = offsets_[t + 1];
    for (std::uint32_t w = lo; w < hi; ++w) {
      const Factor& fw = factors_[w];
      double d = coefficients_[t] * fw.power * ipow(x[fw.variable], fw.power - 1);
      for (std::uint32_t k = lo; k < hi; ++k) {
        if (k != w) d *= ipow(x[factors_[k].variable], factors_[k].power);
      }
      out[fw.variable] += d;
    }
  }
}

void SimplexPolynomial::hessian(std::span<const double> x, std::span<double> out) const {
  const std::size_t n = variables_;
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    const std::uint32_t lo = offsets_[t];
    const std::uint32_t hi = offsets_[t + 1];
    for (std::uint32_t a = lo; a < hi; ++a) {
      for (std::uint32_t b = lo; b < hi; ++b) {
        const Factor& fa = factors_[a];
        const Factor& fb = factors_[b];
        double d = coefficients_[t];
        if (a == b) {
          if (fa.power < 2) continue;
          d *= fa.power * (fa.power - 1.0) * ipow(x[fa.variable], fa.power - 2);
        } else {
          d *= fa.power * ipow(x[fa.variable], fa.power - 1) * fb.power * ipow(x[fb.variable], fb.power - 1);
        }
        for (std::uint32_t k = lo; k < hi; ++k) {
          if (k != a && k != b) d *= ipow(x[factors_[k].variable], factors_[k].power);
        }
        out[fa.variable * n + fb.variable] += d;
      }
    }
  }
}

void project_to_simplex(std::span<double> x, std::span<const char> active) {
  std::vector<double> u;
  u.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (active.empty() || active[i]) u.push_back(x[i]);
  }
  if (u.empty()) throw ValidationError("projection onto an empty face");
  std::sort(u.begin(), u.end(), std::greater<>());
  double running = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    running += u[k];
    const double candidate = (running - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) theta = candidate;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = (active.empty() || active[i]) ? std::max(x[i] - theta, 0.0) : 0.0;
  }
}

AscentResult projected_gradient_ascent(const SimplexPolynomial& p, std::vector<double> start,
                                       const AscentOptions& options, std::span<const char> active) {
  const std::size_t n = p.variables();
  AscentResult result;
  result.x = std::move(start);
  project_to_simplex(result.x, active);
  std::vector<double> grad(n);
  std::vector<double> trial(n);
  double value = p.value(result.x);
  double step = 1.0;
  constexpr double kArmijo = 1e-4;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    p.gradient(result.x, grad);
    bool accepted = false;
    double moved = 0.0;
    double trial_value = value;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = result.x[i] + step * grad[i];
      project_to_simplex(trial, active);
      double predicted = 0.0;
      moved = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        predicted += grad[i] * (trial[i] - result.x[i]);
        moved = std::max(moved, std::abs(trial[i] - result.x[i]));
      }
      trial_value = p.value(trial);
      if (trial_value >= value + kArmijo * predicted) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || moved <= options.step_tolerance) break;
    const bool stalled = trial_value - value <= 1e-17 * std::max(1.0, value) && moved < 1e-12;
    result.x.swap(trial);
    value = trial_value;
    if (stalled) break;
    step = std::min(step * 2.0, 1e6);
  }
  result.value = value;
  result.iterations = it;
  return result;
}

double kkt_residual(const SimplexPolynomial& p, std::span<const double> x) {
  std::vector<double> g(p.variables());
  p.gradient(x, g);
  const double target = p.degree() * p.value(x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) worst = std::max(worst, std::abs(g[i] - target));
  }
  return worst;
}

double kkt_outside_violation(const SimplexPolynomial& p, std::span<const double> x) {
  std::vector<double> g(p.variables());
  p.gradient(x, g);
  const double target = p.degree() * p.value(x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) worst = std::max(worst, g[i] - target);
  }
  return worst;
}

bool polish_stationary_point(const SimplexPolynomial& p, std::vector<double>& x) {
  const std::size_t n = p.variables();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] > 0.0) support.push_back(i);
  }
  const double base_value = p.value(x);
  const double base_residual = kkt_residual(p, x);
  std::vector<double> grad(n);
  std::vector<double> hess(n * n);

  for (int round = 0; round < 4 && !support.empty(); ++round) {
    const std::size_t s = support.size();
    std::vector<double> y(n, 0.0);
    double total = 0.0;
    for (std::size_t i : support) total += x[i];
    for (std::size_t i : support) y[i] = x[i] / total;
    double mu = p.degree() * p.value(y);
    bool feasible = true;
    for (int it = 0; it < 30; ++it) {
      p.gradient(y, grad);
      p.hessian(y, hess);
      Eigen::VectorXd residual(static_cast<Eigen::Index>(s + 1));
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s + 1), static_cast<Eigen::Index>(s + 1));
      double sum = 0.0;
      for (std::size_t a = 0; a < s; ++a) {
        const auto ai = static_cast<Eigen::Index>(a);
        residual(ai) = grad[support[a]] - mu;
        for (std::size_t b = 0; b < s; ++b) jac(ai, static_cast<Eigen::Index>(b)) = hess[support[a] * n + support[b]];
        jac(ai, static_cast<Eigen::Index>(s)) = -1.0;
        jac(static_cast<Eigen::Index>(s), ai) = 1.0;
        sum += y[support[a]];
      }
      residual(static_cast<Eigen::Index>(s)) = sum - 1.0;
      if (residual.lpNorm<Eigen::Infinity>() < 1e-16) break;
      Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(-residual);
      if (!delta.allFinite()) {
        feasible = false;
        break;
      }
      for (std::size_t a = 0; a < s; ++a) y[support[a]] += delta(static_cast<Eigen::Index>(a));
      mu += delta(static_cast<Eigen::Index>(s));
      if (delta.lpNorm<Eigen::Infinity>() < 1e-17) break;
    }
    if (!feasible) return false;
    std::vector<std::size_t> negative;
    for (std::size_t i : support) {
      if (y[i] < 0.0) negative.push_back(i);
    }
    if (!negative.empty()) {
      // Drop the coordinates Newton pushed out of the face and retry on the smaller face.
      std::vector<std::size_t> next;
      for (std::size_t i : support) {
        if (std::find(negative.begin(), negative.end(), i) == negative.end()) next.push_back(i);
      }
      support = std::move(next);
      continue;
    }
    double total_y = 0.0;
    for (double v : y) total_y += v;
    for (double& v : y) v /= total_y;
    const double value = p.value(y);
    if (value >= base_value - 1e-14 && kkt_residual(p, y) <= std::max(base_residual, 1e-15)) {
      x = std::move(y);
      return true;
    }
    return false;
  }
  return false;
}

}  // namespace hlag
