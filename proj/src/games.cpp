#include "zsg/games.hpp"

#include <cmath>

namespace zsg {

namespace {

void check_cournot(const CournotSpec& spec) {
  if (!(spec.demand_intercept > 0)) {
    throw BadSpec("demand_intercept", "demand_intercept must be positive");
  }
  if (!(spec.b >= 0.0) || !(spec.b < 1.0)) {
    throw BadSpec("b", "substitutability b must satisfy 0 <= b < 1");
  }
  for (double ci : spec.c) {
    if (!std::isfinite(ci)) throw BadSpec("c", "costs must be finite");
    if (spec.demand_intercept <= ci) {
      throw BadSpec("c", "demand_intercept must exceed every unit cost");
    }
  }
  if (spec.output_bound < 0.0) {
    throw BadSpec("output_bound", "output_bound must be positive");
  }
}

}  // namespace

MainGame cournot_game(const CournotSpec& spec) {
  check_cournot(spec);
  const double bound = spec.bound();

  MainGame g;
  g.n = 3;
  g.spaces.assign(3, Interval{0.0, bound});
  for (int i = 0; i < 3; ++i) {
    const double a = spec.demand_intercept;
    const double b = spec.b;
    const double ci = spec.c[i];
    g.payoffs.push_back([i, a, b, ci](const Vector& x) {
      double rivals = 0.0;
      for (int j = 0; j < 3; ++j) {
        if (j != i) rivals += x[j];
      }
      return (a - x[i] - b * rivals) * x[i] - ci * x[i];
    });
  }
  g = validate_game(std::move(g));

  // The closed-form equilibrium must fit inside the output intervals.
  const auto eq = cournot_closed_form(spec);
  for (int i = 0; i < 3; ++i) {
    if (eq[i] > bound) {
      throw BadSpec("output_bound",
                    "output_bound does not contain the equilibrium output of "
                    "firm " + std::to_string(i + 1));
    }
  }
  return g;
}

std::array<double, 3> cournot_closed_form(const CournotSpec& spec) {
  check_cournot(spec);
  const double a = spec.demand_intercept;
  const double b = spec.b;
  const auto& c = spec.c;
  const double denom = 2.0 * (2.0 - b) * (b + 1.0);

  std::array<double, 3> x;
  x[0] = ((2.0 - b) * a + b * c[2] + b * c[1] - (2.0 + b) * c[0]) / denom;
  x[1] = ((2.0 - b) * a + b * c[2] + b * c[0] - (2.0 + b) * c[1]) / denom;
  x[2] = ((2.0 - b) * a + b * c[0] + b * c[1] - (2.0 + b) * c[2]) / denom;
  for (int i = 0; i < 3; ++i) {
    if (x[i] < 0.0) throw NegativeOutput(i, x[i]);
  }
  return x;
}

MainGame quadratic_game(const QuadraticGameSpec& spec) {
  if (spec.n <= 0) throw BadSpec("n", "player count must be positive");
  const int n = spec.n;
  if (static_cast<int>(spec.own.size()) != n ||
      static_cast<int>(spec.linear.size()) != n ||
      static_cast<int>(spec.bounds.size()) != n) {
    throw BadSpec("spec", "own, linear and bounds must each have n entries");
  }
  if (static_cast<int>(spec.cross.size()) != n) {
    throw BadSpec("cross", "cross must be an n x n table");
  }
  for (const auto& row : spec.cross) {
    if (static_cast<int>(row.size()) != n) {
      throw BadSpec("cross", "cross must be an n x n table");
    }
  }
  if (!spec.constant.empty() &&
      static_cast<int>(spec.constant.size()) != n) {
    throw BadSpec("constant", "constant must be empty or have n entries");
  }
  for (double q : spec.own) {
    if (!(q < 0.0)) {
      throw BadSpec("own", "own-coefficients must be strictly negative");
    }
  }

  MainGame g;
  g.n = n;
  g.spaces = spec.bounds;
  for (int i = 0; i < n; ++i) {
    const double own = spec.own[i];
    const double lin = spec.linear[i];
    const double cst = spec.constant.empty() ? 0.0 : spec.constant[i];
    const std::vector<double> cross = spec.cross[i];
    g.payoffs.push_back([i, own, lin, cst, cross](const Vector& x) {
      double coupling = 0.0;
      for (int j = 0; j < x.size(); ++j) {
        if (j != i) coupling += cross[j] * x[j];
      }
      return own * x[i] * x[i] + lin * x[i] + x[i] * coupling + cst;
    });
  }
  return validate_game(std::move(g));
}

MainGame symmetric_cournot_game(int n, double demand_intercept, double b,
                                const std::vector<double>& c,
                                double output_bound) {
  if (n <= 0) throw BadSpec("n", "firm count must be positive");
  if (static_cast<int>(c.size()) != n) {
    throw BadSpec("c", "expected one unit cost per firm");
  }
  if (!(b >= 0.0) || !(b < 1.0)) {
    throw BadSpec("b", "substitutability b must satisfy 0 <= b < 1");
  }
  const double bound = output_bound > 0.0 ? output_bound : demand_intercept;

  MainGame g;
  g.n = n;
  g.spaces.assign(n, Interval{0.0, bound});
  for (int i = 0; i < n; ++i) {
    const double ci = c[i];
    g.payoffs.push_back([i, demand_intercept, b, ci](const Vector& x) {
      double rivals = 0.0;
      for (int j = 0; j < x.size(); ++j) {
        if (j != i) rivals += x[j];
      }
      return (demand_intercept - x[i] - b * rivals) * x[i] - ci * x[i];
    });
  }
  return validate_game(std::move(g));
}

}  // namespace zsg
