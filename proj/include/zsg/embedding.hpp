#ifndef ZSG_EMBEDDING_HPP
#define ZSG_EMBEDDING_HPP

#include <functional>
#include <optional>

#include "zsg/core.hpp"
#include "zsg/optimize.hpp"

namespace zsg {

/// The virtual subsidy: a function psi on a compact interval F with
/// min psi = 0 attained at a unique point a.
struct Subsidy {
  Interval domain;
  std::function<double(double)> psi;
  std::optional<double> vertex_hint;
};

/// The (n+1)-player zero-sum extension. pi_i = phi_i + psi(f) for the
/// n main players; the extra player's payoff is -(sum phi_i) - n*psi(f),
/// so the n+1 payoffs cancel algebraically at every profile.
struct ZeroSumExtension {
  MainGame game;
  Subsidy subsidy;
  double a = 0.0;  // unique minimizer of psi
};

/// Per-pair minimax-equality check result for player i against the
/// subsidy player.
struct SionReport {
  int player = 0;
  double maximin_value = 0.0;
  double minimax_value = 0.0;
  double gap = 0.0;
  double arg_x = 0.0;
  double arg_f = 0.0;
  bool passed = false;
  // Grid-line diagnostic: false when phi_i has a strict interior local
  // minimum along the player's axis, so a failed equality is
  // distinguishable from a solver bug.
  bool quasiconcave_diag = true;
};

/// Computes a = argmin psi and checks the normalization min psi = 0 and
/// uniqueness. Throws NonZeroMinimum or NonUniqueMinimizer.
/// With normalize = true a nonzero minimum is shifted away instead of
/// rejected (the shift is applied by `extend`, not here).
double subsidy_minimizer(const Subsidy& subsidy, const Tolerances& tol = {});

/// Builds the zero-sum extension. With normalize = true, psi is
/// replaced by psi - min psi when its minimum is not zero; the default
/// rejects such subsidies.
ZeroSumExtension extend(MainGame game, Subsidy subsidy,
                        const Tolerances& tol = {}, bool normalize = false);

/// Evaluates (pi_1, ..., pi_n, pi_{n+1}) at a profile that carries f.
Vector eval_pi(const ZeroSumExtension& ext, const StrategyProfile& profile);

/// Checks the minimax equality for player `player` with the remaining
/// main players fixed at `others` (length n-1, in player order).
SionReport sion_check(const ZeroSumExtension& ext, int player,
                      const Vector& others, const Tolerances& tol);

/// True iff argmax_{x_i} pi_i(., f) agrees within eq_tol across all
/// f_samples.
bool argmax_invariance_check(const ZeroSumExtension& ext, int player,
                             const Vector& others,
                             const std::vector<double>& f_samples,
                             const Tolerances& tol);

/// Inserts x_i into others (length n-1) to form a full profile.
Vector insert_coordinate(const Vector& others, int player, double xi);

}  // namespace zsg

#endif
