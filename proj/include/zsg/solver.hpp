#ifndef ZSG_SOLVER_HPP
#define ZSG_SOLVER_HPP

#include <vector>

#include "zsg/embedding.hpp"

namespace zsg {

/// Outcome of the maximin fixed-point iteration.
struct SolveReport {
  Vector equilibrium_x;
  double equilibrium_f = 0.0;  // always the subsidy minimizer a
  Vector values;               // phi_i at the equilibrium
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;  // final sup-norm step
};

/// Combined verification outcome for the two equivalence directions:
/// the fixed-point equilibrium existence check and the per-pair
/// minimax equality check.
struct VerificationReport {
  std::vector<SionReport> sion_reports;
  Vector deviation_gaps;
  double zero_sum_residual = 0.0;
  bool theorem1_passed = false;
  bool theorem2_passed = false;
  SolveReport solve;
};

/// argmax of phi_i over x_i with the other players fixed at `others`
/// (length n-1, in player order).
OptResult best_response(const MainGame& game, int player, const Vector& others,
                        const Tolerances& tol);

/// Damped simultaneous maximin iteration:
/// x <- (1-damping)*x + damping*M(x), where M(x)_i is the maximin
/// argument for player i with the others fixed. Stops when the
/// sup-norm step drops below fp_tol. Throws NonConvergence at max_iter.
SolveReport solve_maximin_fixed_point(const ZeroSumExtension& ext,
                                      const StrategyProfile& init,
                                      const Tolerances& tol,
                                      double damping = 0.5,
                                      int max_iter = 10000);

/// Deviation gaps: gap_i = max_{x_i} phi_i - phi_i at the candidate.
/// All gaps <= eq_tol iff the candidate is a Nash equilibrium.
Vector verify_nash(const MainGame& game, const Vector& candidate,
                   const Tolerances& tol);

/// Solves from the domain midpoint, then checks the Nash condition for
/// the main players and optimality of f = a for the subsidy player.
VerificationReport verify_theorem1(const ZeroSumExtension& ext,
                                   const Tolerances& tol,
                                   unsigned int seed = 0);

/// Given a Nash profile of the main game, checks the per-pair minimax
/// equality, argmax consistency and arg_f = a. Throws NotANash when
/// the candidate fails the deviation check.
VerificationReport verify_theorem2(const ZeroSumExtension& ext,
                                   const Vector& nash_x,
                                   const Tolerances& tol,
                                   unsigned int seed = 0);

/// Max relative zero-sum residual of eval_pi over `samples` uniform
/// random profiles.
double zero_sum_residual(const ZeroSumExtension& ext, int samples,
                         unsigned int seed);

}  // namespace zsg

#endif
