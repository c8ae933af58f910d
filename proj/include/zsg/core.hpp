#ifndef ZSG_CORE_HPP
#define ZSG_CORE_HPP

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <vector>

#include "zsg/errors.hpp"

namespace zsg {

using Vector = Eigen::VectorXd;
using Payoff = std::function<double(const Vector&)>;

/// Compact one-dimensional strategy space [lo, hi], lo < hi, both finite.
struct Interval {
  double lo;
  double hi;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return x >= lo && x <= hi; }
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
};

/// The n-player main game: per-player interval spaces and payoff
/// evaluators phi_i mapping a full profile to player i's payoff.
struct MainGame {
  int n = 0;
  std::vector<Interval> spaces;
  std::vector<Payoff> payoffs;
};

/// A point in the product space, optionally carrying the subsidy
/// player's strategy f.
struct StrategyProfile {
  Vector x;
  std::optional<double> f;
};

/// Numerical knobs shared across the toolkit. opt_tol bounds the 1-D
/// optimizer's bracket width, fp_tol the fixed-point sup-norm step,
/// eq_tol the slack for equality verification, tie_tol near-tie
/// detection. scan_points is the coarse localization grid size.
struct Tolerances {
  double opt_tol = 1e-9;
  double fp_tol = 1e-8;
  double eq_tol = 1e-6;
  double tie_tol = 1e-7;
  int scan_points = 257;
};

/// Checks a Tolerances object: all strictly positive, opt_tol <= eq_tol.
void check_tolerances(const Tolerances& tol);

/// Validates a game description: player count, interval sanity, and
/// payoff finiteness probed on a coarse grid (at most ~1e5 points).
/// Throws EmptyGame, BadInterval or NonFinitePayoff.
MainGame validate_game(MainGame candidate);

/// Evaluates (phi_1, ..., phi_n) at the profile. Throws OutOfDomain
/// if any coordinate leaves its interval.
Vector eval_phi(const MainGame& game, const StrategyProfile& profile);

}  // namespace zsg

#endif
