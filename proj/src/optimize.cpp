#include "zsg/optimize.hpp"

#include <cmath>
#include <vector>

namespace zsg {

namespace {

double checked_eval(const Objective1d& objective, double x, long& evals) {
  const double v = objective(x);
  ++evals;
  if (!std::isfinite(v)) {
    throw NonFiniteObjective(x, "objective is non-finite at x=" +
                                    std::to_string(x));
  }
  return v;
}

constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio

// Golden-section minimization on [a, b], assumed to bracket the
// minimizer. Shrinks to width tol; ties shrink leftward.
void golden_refine(const Objective1d& objective, double a, double b,
                   double tol, long& evals, double& best_arg,
                   double& best_val) {
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = checked_eval(objective, x1, evals);
  double f2 = checked_eval(objective, x2, evals);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = checked_eval(objective, x1, evals);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = checked_eval(objective, x2, evals);
    }
  }
  if (f1 <= f2) {
    best_arg = x1;
    best_val = f1;
  } else {
    best_arg = x2;
    best_val = f2;
  }
}

}  // namespace

OptResult minimize_1d(const Objective1d& objective, const Interval& domain,
                      double tol, const Tolerances& tols) {
  const int m = tols.scan_points;
  const double step = domain.width() / (m - 1);
  long evals = 0;

  std::vector<double> xs(m), fs(m);
  for (int i = 0; i < m; ++i) {
    xs[i] = (i == m - 1) ? domain.hi : domain.lo + step * i;
    fs[i] = checked_eval(objective, xs[i], evals);
  }

  int best = 0;
  for (int i = 1; i < m; ++i) {
    if (fs[i] < fs[best]) best = i;  // leftmost on ties
  }

  bool multiplicity = false;
  for (int i = 0; i < m; ++i) {
    if (i != best && std::abs(xs[i] - xs[best]) > 10.0 * tol &&
        fs[i] - fs[best] <= tols.tie_tol) {
      multiplicity = true;
      break;
    }
  }

  const double lo = (best == 0) ? xs[0] : xs[best - 1];
  const double hi = (best == m - 1) ? xs[m - 1] : xs[best + 1];

  OptResult res;
  res.multiplicity_flag = multiplicity;
  if (hi - lo <= tol) {
    res.arg = xs[best];
    res.value = fs[best];
  } else {
    golden_refine(objective, lo, hi, tol, evals, res.arg, res.value);
    if (fs[best] < res.value) {  // scan point may still win on a flat bracket
      res.arg = xs[best];
      res.value = fs[best];
    }
  }
  res.evals = evals;
  return res;
}

OptResult maximize_1d(const Objective1d& objective, const Interval& domain,
                      double tol, const Tolerances& tols) {
  OptResult res = minimize_1d([&](double x) { return -objective(x); }, domain,
                              tol, tols);
  res.value = -res.value;
  return res;
}

OptResult maximin(const Interval& inner_domain, const Interval& outer_domain,
                  const Objective2d& objective, double tol,
                  const Tolerances& tols) {
  long inner_evals = 0;
  const auto envelope = [&](double x) {
    OptResult inner = minimize_1d(
        [&](double f) { return objective(x, f); }, inner_domain, tol / 10.0,
        tols);
    inner_evals += inner.evals;
    return inner.value;
  };
  OptResult res = maximize_1d(envelope, outer_domain, tol, tols);
  res.evals = inner_evals;
  return res;
}

OptResult minimax(const Interval& inner_domain, const Interval& outer_domain,
                  const Objective2d& objective, double tol,
                  const Tolerances& tols) {
  long inner_evals = 0;
  const auto envelope = [&](double f) {
    OptResult inner = maximize_1d(
        [&](double x) { return objective(x, f); }, outer_domain, tol / 10.0,
        tols);
    inner_evals += inner.evals;
    return inner.value;
  };
  OptResult res = minimize_1d(envelope, inner_domain, tol, tols);
  res.evals = inner_evals;
  return res;
}

}  // namespace zsg
