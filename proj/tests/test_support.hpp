#ifndef ZSG_TEST_SUPPORT_HPP
#define ZSG_TEST_SUPPORT_HPP

#include <cmath>
#include <random>

#include "zsg/embedding.hpp"
#include "zsg/games.hpp"

namespace zsg::test {

// Single-player toy: phi(x) = -(x-3)^2 on [0,10].
inline MainGame toy_game() {
  MainGame g;
  g.n = 1;
  g.spaces = {Interval{0.0, 10.0}};
  g.payoffs = {[](const Vector& x) { return -(x[0] - 3.0) * (x[0] - 3.0); }};
  return validate_game(std::move(g));
}

inline Subsidy quadratic_subsidy(double vertex, Interval domain) {
  return Subsidy{domain,
                 [vertex](double f) { return (f - vertex) * (f - vertex); },
                 vertex};
}

inline ZeroSumExtension toy_extension() {
  return extend(toy_game(), quadratic_subsidy(2.0, {0.0, 5.0}));
}

inline CournotSpec symmetric_spec() {
  return CournotSpec{10.0, 0.5, {1.0, 1.0, 1.0}, 10.0};
}

inline CournotSpec asymmetric_spec() {
  return CournotSpec{10.0, 0.5, {1.0, 2.0, 3.0}, 10.0};
}

inline ZeroSumExtension cournot_extension(const CournotSpec& spec) {
  return extend(cournot_game(spec), quadratic_subsidy(4.0, {0.0, 8.0}));
}

// Independent oracle: exhaustive scan minimization at 1e6+1 points.
inline std::pair<double, double> scan_min(const std::function<double(double)>& g,
                                          Interval dom, long points = 1000000) {
  double best_x = dom.lo;
  double best_v = g(dom.lo);
  for (long i = 1; i <= points; ++i) {
    const double x = dom.lo + dom.width() * i / points;
    const double v = g(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  return {best_x, best_v};
}

// Draws a CournotSpec in the interior-equilibrium regime (rejection on
// negative closed-form outputs).
inline CournotSpec random_cournot_spec(std::mt19937& rng, double b_max = 0.9) {
  std::uniform_real_distribution<double> bdist(0.0, b_max);
  std::uniform_real_distribution<double> cdist(0.0, 5.0);
  for (;;) {
    CournotSpec spec;
    spec.demand_intercept = 10.0;
    spec.b = bdist(rng);
    for (int i = 0; i < 3; ++i) spec.c[i] = cdist(rng);
    spec.output_bound = 10.0;
    try {
      (void)cournot_closed_form(spec);
      return spec;
    } catch (const NegativeOutput&) {
      // outside the interior regime, redraw
    }
  }
}

}  // namespace zsg::test

#endif
