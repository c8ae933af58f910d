#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "zsg/optimize.hpp"

using namespace zsg;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("minimize_1d finds a quadratic vertex") {
  const auto r = minimize_1d([](double x) { return (x - 2.5) * (x - 2.5); },
                             {0.0, 10.0}, 1e-9);
  CHECK(r.arg == doctest::Approx(2.5).epsilon(1e-8));
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(r.multiplicity_flag);
}

TEST_CASE("minimize_1d takes the boundary for a monotone objective") {
  const auto r = minimize_1d([](double x) { return x; }, {1.0, 3.0}, 1e-9);
  CHECK(r.arg == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("minimize_1d on cos agrees with the brute-force scan") {
  const Interval dom{0.0, 6.2832};
  const auto oracle = test::scan_min([](double x) { return std::cos(x); }, dom);
  const auto r = minimize_1d([](double x) { return std::cos(x); }, dom, 1e-9);
  CHECK(r.arg == doctest::Approx(kPi).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(r.value - oracle.second) < 1e-9);
}

TEST_CASE("maximize_1d mirrors minimize_1d") {
  const auto r = maximize_1d([](double x) { return -(x - 3.0) * (x - 3.0); },
                             {0.0, 10.0}, 1e-9);
  CHECK(r.arg == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));

  const auto b = maximize_1d([](double x) { return x; }, {1.0, 3.0}, 1e-9);
  CHECK(b.arg == doctest::Approx(3.0));
  CHECK(b.value == doctest::Approx(3.0));
}

TEST_CASE("maximize_1d solves the cournot best-response objective") {
  // first-order condition with x_2 = x_3 = 3, a = 10, b = 0.5, c_1 = 1
  // gives x_1 = 3
  const auto r = maximize_1d(
      [](double x1) { return (10.0 - x1 - 0.5 * 6.0) * x1 - 1.0 * x1; },
      {0.0, 10.0}, 1e-9);
  CHECK(r.arg == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("negation symmetry is exact") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    const auto g = [=](double x) {
      return a * x * x * x + b * x * x + c * x + d * std::sin(3 * x);
    };
    const auto mx = maximize_1d(g, {-2.0, 2.0}, 1e-9);
    const auto mn = minimize_1d([&](double x) { return -g(x); }, {-2.0, 2.0},
                                1e-9);
    CHECK(mx.arg == mn.arg);
    CHECK(mx.value == -mn.value);
  }
}

TEST_CASE("minimize_1d matches a 1e6-point scan on random polynomials") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    double a[7];
    for (double& ai : a) ai = coef(rng);
    const auto poly = [&a](double x) {
      double v = 0.0;
      for (int k = 6; k >= 0; --k) v = v * x + a[k];
      return v;
    };
    const auto oracle = test::scan_min(poly, {-1.5, 1.5});
    const auto r = minimize_1d(poly, {-1.5, 1.5}, 1e-9);
    CHECK(r.value <= oracle.second + 1e-6);
    CHECK(std::abs(r.value - oracle.second) < 1e-6);
  }
}

TEST_CASE("non-finite objective is reported with its location") {
  try {
    minimize_1d([](double x) { return std::sqrt(x - 1.0); }, {0.0, 2.0}, 1e-9);
    FAIL("expected NonFiniteObjective");
  } catch (const NonFiniteObjective& e) {
    CHECK(e.location < 1.0);
  }
}

TEST_CASE("near-tied global minima set the multiplicity flag") {
  // symmetric double well, global minima at +-1
  const auto r = minimize_1d(
      [](double x) { return (x * x - 1.0) * (x * x - 1.0); }, {-2.0, 2.0},
      1e-9);
  CHECK(r.multiplicity_flag);
  CHECK(r.arg == doctest::Approx(-1.0).epsilon(1e-6));  // leftmost wins
}

TEST_CASE("maximin and minimax on a separable objective") {
  const auto obj = [](double x, double f) {
    return -(x - 3.0) * (x - 3.0) + (f - 2.0) * (f - 2.0);
  };
  const auto lo = maximin({0.0, 5.0}, {0.0, 10.0}, obj, 1e-9);
  CHECK(lo.arg == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(lo.value == doctest::Approx(0.0).epsilon(1e-9));

  const auto hi = minimax({0.0, 5.0}, {0.0, 10.0}, obj, 1e-9);
  CHECK(hi.arg == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(hi.value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("maximin and minimax on the bilinear x*f") {
  const auto obj = [](double x, double f) { return x * f; };
  const auto lo = maximin({-1.0, 1.0}, {0.0, 1.0}, obj, 1e-9);
  CHECK(lo.value == doctest::Approx(0.0).epsilon(1e-7));
  const auto hi = minimax({-1.0, 1.0}, {0.0, 1.0}, obj, 1e-9);
  CHECK(hi.value == doctest::Approx(0.0).epsilon(1e-7));
}

TEST_CASE("maximin and minimax on the cournot pair payoff") {
  // player 1 with x_2 = x_3 = 3 and subsidy (f-4)^2 on [0,8]
  const auto obj = [](double x1, double f) {
    return (10.0 - x1 - 0.5 * 6.0) * x1 - x1 + (f - 4.0) * (f - 4.0);
  };
  const auto lo = maximin({0.0, 8.0}, {0.0, 10.0}, obj, 1e-9);
  CHECK(lo.arg == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(lo.value == doctest::Approx(9.0).epsilon(1e-9));

  const auto hi = minimax({0.0, 8.0}, {0.0, 10.0}, obj, 1e-9);
  CHECK(hi.arg == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(hi.value == doctest::Approx(9.0).epsilon(1e-9));
}

TEST_CASE("weak duality holds on random objectives") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const Tolerances tol;
  for (int t = 0; t < 20; ++t) {
    const double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    const auto obj = [=](double x, double f) {
      return a * x * f + b * x * x + c * f * f + d * x;
    };
    const auto lo = maximin({-1.0, 1.0}, {-1.0, 1.0}, obj, 1e-9);
    const auto hi = minimax({-1.0, 1.0}, {-1.0, 1.0}, obj, 1e-9);
    CHECK(lo.value <= hi.value + 2.0 * tol.eq_tol);
  }
}

TEST_CASE("separable objectives collapse to max phi on both sides") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> coef(0.5, 2.0);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  const Tolerances tol;
  for (int t = 0; t < 20; ++t) {
    const double q = coef(rng), s = shift(rng), v = shift(rng);
    const auto phi = [=](double x) { return -q * (x - s) * (x - s); };
    // psi with minimum 0 inside the domain
    const auto obj = [=](double x, double f) {
      return phi(x) + (f - v) * (f - v);
    };
    const auto phimax = maximize_1d(phi, {-3.0, 3.0}, 1e-9);
    const auto lo = maximin({-3.0, 3.0}, {-3.0, 3.0}, obj, 1e-9);
    const auto hi = minimax({-3.0, 3.0}, {-3.0, 3.0}, obj, 1e-9);
    CHECK(std::abs(lo.value - phimax.value) <= 2.0 * tol.eq_tol);
    CHECK(std::abs(hi.value - phimax.value) <= 2.0 * tol.eq_tol);
  }
}
