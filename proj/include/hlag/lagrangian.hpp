#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hlag/hypergraph.hpp"
#include "hlag/rational.hpp"

namespace hlag {

/// A point of the standard simplex. Float vectors sum to 1 within 1e-12; exact
/// vectors sum to exactly 1 and also carry their double approximations.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws ValidationError on a negative, non-finite or badly normalized entry.
  static WeightVector floating(std::vector<double> weights);
  static WeightVector exact(std::vector<Rational> weights);
  /// 1/n on every vertex (exact).
  static WeightVector uniform(std::size_t n);

  bool is_exact() const noexcept { return exact_.has_value(); }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  /// Exact entries; empty span for float vectors.
  std::span<const Rational> exact_values() const noexcept;

 private:
  std::vector<double> values_;
  std::optional<std::vector<Rational>> exact_;
};

/// Result of evaluate: always a double, plus the exact value for exact input.
struct Number {
  double value = 0.0;
  std::optional<Rational> exact;
};

/// lambda(G, x) = sum over edges of the product of weights. The span overloads check
/// dimension and nonnegativity but not normalization, so they also serve as plain
/// polynomial evaluation. Float mode uses compensated summation.
double evaluate(const Hypergraph& g, std::span<const double> x);
Rational evaluate(const Hypergraph& g, std::span<const Rational> x);
Number evaluate(const Hypergraph& g, const WeightVector& x);

/// Partial derivatives of lambda(G, .) at x.
std::vector<double> gradient(const Hypergraph& g, std::span<const double> x);
std::vector<Rational> gradient(const Hypergraph& g, std::span<const Rational> x);

enum class OptimumMode { floating, rational_certified };

std::string_view to_string(OptimumMode mode);

struct MaximizeOptions {
  int restarts = 64;
  int certify_restarts = 8;
  double kkt_tol = 1e-8;
  std::uint64_t seed = 0;
  /// Support enumeration runs when the symmetry-reduced problem has at most this
  /// many variables.
  std::size_t exact_support_n = 8;
  bool symmetry_reduction = true;
  /// Try to recognize the optimum as rational and certify it exactly.
  bool rational_recognition = true;

  /// Cheap settings for enumeration inner loops.
  static MaximizeOptions fast();
};

struct OptimumResult {
  double value = 0.0;
  WeightVector weighting;
  /// Vertices with positive weight, ascending.
  std::vector<Vertex> support;
  /// max over the support of |dlambda/dx_i - r * value|.
  double kkt_residual = 0.0;
  /// max over vertices outside the support of max(0, dlambda/dx_i - r * value).
  double outside_violation = 0.0;
  int restarts = 0;
  OptimumMode mode = OptimumMode::floating;
  bool certified = false;
  std::uint64_t seed = 0;
  /// Set in rational_certified mode.
  std::optional<Rational> exact_value;
};

/// Best value over symmetry-reduced ascent, full-space projected gradient ascent from
/// the uniform start and `restarts` seeded random starts, and face-by-face support
/// enumeration on small reduced problems, followed by Newton refinement of the
/// first-order system. Never throws; the empty graph yields 0.
OptimumResult maximize(const Hypergraph& g, const MaximizeOptions& options = {});

nlohmann::json to_json(const OptimumResult& result);

/// High-precision closed forms of block-reduced optima.
struct ClosedForm {
  std::string name;
  std::string expression;
  double value = 0.0;
  std::optional<Rational> exact;
  /// The graph the formula belongs to.
  Hypergraph graph;
  /// Optimal weight of each vertex of `graph`.
  std::vector<double> weights;
};

/// Names: "K<t>" (uses r), "K4-", "K6-", "K8-" (r = 3) and "F3-completion", the
/// complement bound graph of the F3 case. Throws ValidationError otherwise.
ClosedForm closed_form(std::string_view name, int r = 3);

struct CliqueLagrangian {
  Rational lambda;
  int clique_number = 0;
  std::vector<Vertex> clique;
};

/// Exact Lagrangian of a 2-graph through its clique number. Requires r = 2, n <= 32.
CliqueLagrangian motzkin_straus(const Hypergraph& g);

struct DensityOptions {
  MaximizeOptions maximize;
  double strictness_tol = 1e-9;
};

/// Every single-vertex deletion lowers lambda by more than strictness_tol. The empty
/// graph is not dense.
bool is_dense(const Hypergraph& g, const DensityOptions& options = {});

struct DenseCore {
  Hypergraph graph;
  /// original[k] is the id in the input of vertex k+1 of `graph`.
  std::vector<Vertex> original;
  OptimumResult optimum;
};

/// Shrinks to the support of an optimum and deletes vertices whose removal keeps
/// lambda, until the remainder is dense (or edgeless).
DenseCore densify(const Hypergraph& g, const DensityOptions& options = {});

/// r! * lambda(G).
double lagrangian_density_lower_bound(const Hypergraph& g, const MaximizeOptions& options = {});

}  // namespace hlag
