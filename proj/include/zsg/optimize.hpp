#ifndef ZSG_OPTIMIZE_HPP
#define ZSG_OPTIMIZE_HPP

#include <functional>

#include "zsg/core.hpp"

namespace zsg {

using Objective1d = std::function<double(double)>;
using Objective2d = std::function<double(double, double)>;

/// Result of a scalar optimization: location, value, a near-tie flag
/// and the number of objective evaluations spent.
struct OptResult {
  double arg = 0.0;
  double value = 0.0;
  bool multiplicity_flag = false;
  long evals = 0;
};

/// Global minimization on a compact interval: uniform coarse scan to
/// localize the best bracket, then golden-section refinement to width
/// tol. Leftmost bracket wins ties; multiplicity_flag is set when two
/// scan points more than 10*tol apart both lie within tie_tol of the
/// best value. Throws NonFiniteObjective on NaN/inf.
OptResult minimize_1d(const Objective1d& objective, const Interval& domain,
                      double tol, const Tolerances& tols = {});

/// maximize_1d(g) == -minimize_1d(-g), same arg, negated value.
OptResult maximize_1d(const Objective1d& objective, const Interval& domain,
                      double tol, const Tolerances& tols = {});

/// max over outer of min over inner of objective(outer, inner). The
/// inner minimum is solved to tol/10 so envelope noise stays below the
/// outer tolerance. Returned arg is the outer variable's location.
OptResult maximin(const Interval& inner_domain, const Interval& outer_domain,
                  const Objective2d& objective, double tol,
                  const Tolerances& tols = {});

/// min over the inner variable of max over the outer variable;
/// returned arg is the inner (f) variable's location.
OptResult minimax(const Interval& inner_domain, const Interval& outer_domain,
                  const Objective2d& objective, double tol,
                  const Tolerances& tols = {});

}  // namespace zsg

#endif
