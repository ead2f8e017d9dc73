#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

/// A homogeneous polynomial with nonnegative coefficients, maximized over the
/// standard simplex. The hypergraph Lagrangian and its symmetry-reduced forms are
/// both instances.
class SimplexPolynomial {
 public:
  struct Factor {
    std::uint32_t variable;
    std::uint32_t power;
  };

  SimplexPolynomial(std::size_t variables, int degree) : variables_(variables), degree_(degree) {}

  /// Edge monomials of `g`, one variable per vertex.
  static SimplexPolynomial from_hypergraph(const Hypergraph& g);

  /// Collapses each class of `classes` to one variable z_c = (total weight of the
  /// class), assuming equal weights inside a class.
  static SimplexPolynomial reduced(const Hypergraph& g, const VertexPartition& classes);

  void add_term(double coefficient, std::span<const Factor> factors);

  std::size_t variables() const noexcept { return variables_; }
  int degree() const noexcept { return degree_; }
  std::size_t terms() const noexcept { return coefficients_.size(); }

  double value(std::span<const double> x) const;
  void gradient(std::span<const double> x, std::span<double> out) const;
  /// Dense row-major Hessian.
  void hessian(std::span<const double> x, std::span<double> out) const;

 private:
  std::size_t variables_;
  int degree_;
  std::vector<double> coefficients_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Factor> factors_;
};

/// Euclidean projection onto {x >= 0, sum x = 1} restricted to the coordinates with
/// active[i] != 0; inactive coordinates are set to zero. Empty `active` means all.
void project_to_simplex(std::span<double> x, std::span<const char> active = {});

struct AscentOptions {
  int max_iterations = 20000;
  double step_tolerance = 1e-15;
};

struct AscentResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

/// Projected gradient ascent with Armijo backtracking along the projection arc.
AscentResult projected_gradient_ascent(const SimplexPolynomial& p, std::vector<double> start,
                                       const AscentOptions& options = {}, std::span<const char> active = {});

/// Newton iterations on the first-order system restricted to the support of x:
/// equal partial derivatives across the support and unit sum. Replaces x only when
/// the refined point stays feasible and does not lose value. Returns true if x changed.
bool polish_stationary_point(const SimplexPolynomial& p, std::vector<double>& x);

/// max over i with x_i > 0 of |dP/dx_i - degree * P(x)|.
double kkt_residual(const SimplexPolynomial& p, std::span<const double> x);

/// max over i with x_i == 0 of max(0, dP/dx_i - degree * P(x)).
double kkt_outside_violation(const SimplexPolynomial& p, std::span<const double> x);

}  // namespace hlag
