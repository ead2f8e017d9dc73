#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"

#include "hlag/error.hpp"
#include "hlag/generators.hpp"
#include "hlag/lagrangian.hpp"

using namespace hlag;

namespace {

// Largest weighted edge sum over the simplex grid with step 1/steps (n <= 6).
double grid_max(const Hypergraph& g, int steps) {
  const std::size_t n = g.order();
  std::vector<int> k(n, 0);
  std::vector<double> x(n);
  double best = 0.0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == n) {
      k[pos] = left;
      for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(k[i]) / steps;
      double sum = 0.0;
      for (const Edge& e : g.edges()) {
        double p = 1.0;
        for (Vertex v : e) p *= x[v - 1];
        sum += p;
      }
      best = std::max(best, sum);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      k[pos] = a;
      rec(pos + 1, left - a);
    }
  };
  rec(0, steps);
  return best;
}

}  // namespace

TEST_CASE("evaluation") {
  const Hypergraph k4 = complete(4, 3);
  CHECK(evaluate(k4, WeightVector::uniform(4)).exact == Rational(1, 16));
  const std::vector<double> third{1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK(evaluate(Hypergraph(3, 3, {{1, 2, 3}}), third) == doctest::Approx(1.0 / 27).epsilon(1e-15));
  const std::vector<double> corner{0, 1, 0, 0};
  CHECK(evaluate(k4, corner) == 0.0);
  CHECK_THROWS_AS(evaluate(k4, std::vector<double>{0.5, 0.5}), ValidationError);
}

TEST_CASE("gradient") {
  const std::vector<Rational> quarter(4, Rational(1, 4));
  for (const Rational& d : gradient(complete(4, 3), quarter)) CHECK(d == Rational(3, 16));
  const std::vector<double> corner{1, 0, 0};
  for (double d : gradient(Hypergraph(3, 3, {{1, 2, 3}}), corner)) CHECK(d == 0.0);

  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const Hypergraph g = random_hypergraph(7, 3, 0.4, rng);
    const std::vector<double> x = random_simplex_point(7, rng);
    const std::vector<double> grad = gradient(g, x);
    // Euler's identity for a homogeneous cubic.
    double dot = 0.0;
    for (std::size_t i = 0; i < 7; ++i) dot += x[i] * grad[i];
    CHECK(dot == doctest::Approx(3.0 * evaluate(g, x)).epsilon(1e-12));
    // Central differences; the polynomial is cubic so the error is O(h^2).
    const double h = 1e-5;
    for (std::size_t i = 0; i < 7; ++i) {
      std::vector<double> up = x;
      std::vector<double> down = x;
      up[i] += h;
      down[i] -= h;
      CHECK(grad[i] == doctest::Approx((evaluate(g, up) - evaluate(g, down)) / (2 * h)).epsilon(1e-6));
    }
  }
}

TEST_CASE("maximize on known graphs") {
  const OptimumResult k4m = maximize(complete_minus(4, 3));
  CHECK(std::abs(k4m.value - 4.0 / 81) <= 1e-9);
  CHECK(k4m.certified);
  CHECK(k4m.mode == OptimumMode::rational_certified);
  CHECK(k4m.exact_value == Rational(4, 81));

  CHECK(std::abs(maximize(complete(5, 3)).value - 2.0 / 25) <= 1e-9);
  CHECK(std::abs(maximize(complete(8, 3)).value - 7.0 / 64) <= 1e-9);
  CHECK(std::abs(maximize(named("M2")).value - 1.0 / 27) <= 1e-9);

  const OptimumResult empty = maximize(Hypergraph(3, 5, std::vector<Edge>{}));
  CHECK(empty.value == 0.0);
  CHECK(empty.certified);
  CHECK(maximize(Hypergraph(3, 0, std::vector<Edge>{})).value == 0.0);
}

TEST_CASE("maximize agrees with a grid search") {
  const Hypergraph m2 = named("M2");
  const double grid = grid_max(m2, 60);
  CHECK(grid == doctest::Approx(1.0 / 27).epsilon(1e-12));
  CHECK(std::abs(maximize(m2).value - grid) <= 1e-9);

  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    const Hypergraph g = random_hypergraph(5, 3, 0.5, rng);
    const double lambda = maximize(g).value;
    const double coarse = grid_max(g, 60);
    CHECK(coarse <= lambda + 1e-12);
    // A grid point within 1/60 of the optimum loses at most a few percent on 5 vertices.
    CHECK(lambda - coarse <= 2e-3);
  }
}

TEST_CASE("complete graphs of other uniformities") {
  for (int r : {2, 4}) {
    for (int t = r; t <= 7; ++t) {
      const double expected = static_cast<double>(binomial(t, r)) / std::pow(t, r);
      CHECK(std::abs(maximize(complete(t, r)).value - expected) <= 1e-9);
    }
  }
}

TEST_CASE("blowups keep the Lagrangian") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 20; ++k) {
    const Hypergraph g = random_hypergraph(5, 3, 0.6, rng);
    const std::vector<std::size_t> sizes{1, 2, 1, 3, 2};
    CHECK(std::abs(maximize(blowup(g, sizes)).value - maximize(g).value) <= 1e-8);
  }
}

TEST_CASE("optimum is an upper bound and satisfies KKT") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    const Hypergraph g = random_hypergraph(7, 3, 0.45, rng);
    const OptimumResult opt = maximize(g);
    for (int s = 0; s < 20; ++s) CHECK(evaluate(g, random_simplex_point(7, rng)) <= opt.value + 1e-12);
    CHECK(opt.kkt_residual <= 1e-8);
    CHECK(opt.outside_violation <= 1e-8);
    const OptimumResult plain = maximize(g, [] {
      MaximizeOptions m;
      m.symmetry_reduction = false;
      return m;
    }());
    CHECK(std::abs(plain.value - opt.value) <= 1e-9);
  }
}

TEST_CASE("seeded runs repeat exactly") {
  std::mt19937_64 rng(19);
  const Hypergraph g = random_hypergraph(8, 3, 0.4, rng);
  MaximizeOptions m;
  m.seed = 42;
  m.rational_recognition = false;
  const OptimumResult a = maximize(g, m);
  const OptimumResult b = maximize(g, m);
  CHECK(a.value == b.value);
  CHECK(to_json(a) == to_json(b));
  CHECK(a.seed == 42);
}

TEST_CASE("closed forms") {
  CHECK(closed_form("K6").exact == Rational(5, 54));
  const double a6 = (3.0 - std::sqrt(6.0)) / 3.0;
  const double k6m = a6 * a6 * a6 - 3 * a6 * a6 + a6;
  CHECK(closed_form("K6-").value == doctest::Approx(k6m).epsilon(1e-14));
  CHECK(closed_form("K6-").value < 0.0887);
  CHECK(closed_form("K8-").value == doctest::Approx((130 * std::sqrt(13.0) - 460) / 81).epsilon(1e-14));
  CHECK(closed_form("K8-").value < 0.1077);
  CHECK(closed_form("K8-").value > 0.10767);
  for (const char* name : {"K4-", "K6-", "K8-", "F3-completion"}) {
    const ClosedForm cf = closed_form(name);
    CAPTURE(name);
    CHECK(std::abs(maximize(cf.graph).value - cf.value) <= 1e-9);
    CHECK(evaluate(cf.graph, cf.weights) == doctest::Approx(cf.value).epsilon(1e-12));
  }
  CHECK_THROWS_AS(closed_form("K2-"), ValidationError);
}

TEST_CASE("Motzkin-Straus") {
  const CliqueLagrangian tri = motzkin_straus(complete(3, 2));
  CHECK(tri.lambda == Rational(1, 3));
  CHECK(tri.clique_number == 3);
  const CliqueLagrangian edge = motzkin_straus(Hypergraph(2, 2, {{1, 2}}));
  CHECK(edge.lambda == Rational(1, 4));
  CHECK(edge.clique_number == 2);
  const CliqueLagrangian none = motzkin_straus(Hypergraph(2, 5, std::vector<Edge>{}));
  CHECK(none.lambda == 0);
  CHECK(none.clique_number == 1);
  CHECK_THROWS_AS(motzkin_straus(complete(4, 3)), ValidationError);
}

TEST_CASE("density") {
  CHECK(is_dense(complete(5, 3)));
  CHECK_FALSE(is_dense(Hypergraph(3, 5, complete(4, 3).edges())));
  CHECK_FALSE(is_dense(Hypergraph(3, 3, std::vector<Edge>{})));
  const DenseCore core = densify(named("M2"));
  CHECK(core.graph.size() == 1);
  CHECK(core.graph.order() == 3);
  CHECK(std::abs(core.optimum.value - 1.0 / 27) <= 1e-9);
  const DenseCore k6 = densify(Hypergraph(3, 7, complete(6, 3).edges()));
  CHECK(k6.graph == complete(6, 3));
  CHECK(k6.original == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("density lower bounds") {
  CHECK(std::abs(lagrangian_density_lower_bound(complete(6, 3)) - 5.0 / 9) <= 1e-9);
  CHECK(std::abs(lagrangian_density_lower_bound(complete(8, 3)) - 21.0 / 32) <= 1e-9);
  CHECK(std::abs(lagrangian_density_lower_bound(complete(4, 3)) - 3.0 / 8) <= 1e-9);
}

TEST_CASE("rational recognition") {
  CHECK(recognize_rational(4.0 / 81) == Rational(4, 81));
  CHECK(recognize_rational(0.25) == Rational(1, 4));
  CHECK_FALSE(recognize_rational(std::sqrt(2.0), 10000, 1e-12).has_value());
  CHECK(to_string(Rational(7, 64)) == "7/64");
}
