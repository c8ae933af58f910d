#include "zsg/solver.hpp"

#include <cmath>
#include <random>

namespace zsg {

OptResult best_response(const MainGame& game, int player, const Vector& others,
                        const Tolerances& tol) {
  const Interval& dom = game.spaces[player];
  return maximize_1d(
      [&](double xi) {
        return game.payoffs[player](insert_coordinate(others, player, xi));
      },
      dom, tol.opt_tol, tol);
}

namespace {

Vector drop_coordinate(const Vector& x, int player) {
  Vector others(x.size() - 1);
  for (int j = 0, k = 0; j < x.size(); ++j) {
    if (j != player) others[k++] = x[j];
  }
  return others;
}

// One simultaneous sweep: M(x)_i = maximin argument of player i's
// zero-sum payoff over (x_i, f) with the others fixed.
Vector maximin_map(const ZeroSumExtension& ext, const Vector& x,
                   const Tolerances& tol) {
  const int n = ext.game.n;
  Vector out(n);
  for (int i = 0; i < n; ++i) {
    const Vector others = drop_coordinate(x, i);
    const OptResult r = maximin(
        ext.subsidy.domain, ext.game.spaces[i],
        [&](double xi, double f) {
          return ext.game.payoffs[i](insert_coordinate(others, i, xi)) +
                 ext.subsidy.psi(f);
        },
        tol.opt_tol, tol);
    out[i] = r.arg;
  }
  return out;
}

}  // namespace

SolveReport solve_maximin_fixed_point(const ZeroSumExtension& ext,
                                      const StrategyProfile& init,
                                      const Tolerances& tol, double damping,
                                      int max_iter) {
  if (!(damping > 0.0) || damping > 1.0) {
    throw BadSpec("damping", "damping must lie in (0, 1]");
  }
  const int n = ext.game.n;
  Vector x = init.x;

  SolveReport rep;
  rep.equilibrium_f = ext.a;
  for (int it = 1; it <= max_iter; ++it) {
    const Vector target = maximin_map(ext, x, tol);
    const Vector next = (1.0 - damping) * x + damping * target;
    const double step = (next - x).lpNorm<Eigen::Infinity>();
    x = next;
    rep.iterations = it;
    rep.residual = step;
    if (step <= tol.fp_tol) {
      rep.converged = true;
      break;
    }
  }
  if (!rep.converged) {
    throw NonConvergence(std::vector<double>(x.data(), x.data() + n),
                         rep.residual, rep.iterations);
  }
  rep.equilibrium_x = x;
  rep.values = eval_phi(ext.game, {x, {}});
  return rep;
}

Vector verify_nash(const MainGame& game, const Vector& candidate,
                   const Tolerances& tol) {
  const Vector phi = eval_phi(game, {candidate, {}});
  Vector gaps(game.n);
  for (int i = 0; i < game.n; ++i) {
    const OptResult br = best_response(game, i, drop_coordinate(candidate, i), tol);
    gaps[i] = br.value - phi[i];
  }
  return gaps;
}

double zero_sum_residual(const ZeroSumExtension& ext, int samples,
                         unsigned int seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = ext.game.n;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    StrategyProfile p;
    p.x.resize(n);
    for (int i = 0; i < n; ++i) {
      const Interval& iv = ext.game.spaces[i];
      p.x[i] = iv.lo + iv.width() * unit(rng);
    }
    p.f = ext.subsidy.domain.lo + ext.subsidy.domain.width() * unit(rng);
    const Vector pi = eval_pi(ext, p);
    const double scale = pi.cwiseAbs().maxCoeff();
    const double resid = std::abs(pi.sum());
    worst = std::max(worst, scale > 0.0 ? resid / scale : resid);
  }
  return worst;
}

namespace {

// Subsidy-player optimality at a fixed main profile: pi_{n+1} is
// maximized over f exactly where psi is minimized.
bool subsidy_player_optimal(const ZeroSumExtension& ext, const Vector& x,
                            const Tolerances& tol) {
  const Vector phi = eval_phi(ext.game, {x, {}});
  const double phi_sum = phi.sum();
  const int n = ext.game.n;
  const OptResult r = maximize_1d(
      [&](double f) { return -phi_sum - n * ext.subsidy.psi(f); },
      ext.subsidy.domain, tol.opt_tol, tol);
  return std::abs(r.arg - ext.a) <= tol.eq_tol;
}

}  // namespace

VerificationReport verify_theorem1(const ZeroSumExtension& ext,
                                   const Tolerances& tol, unsigned int seed) {
  const int n = ext.game.n;
  StrategyProfile init;
  init.x.resize(n);
  for (int i = 0; i < n; ++i) init.x[i] = ext.game.spaces[i].mid();

  VerificationReport rep;
  rep.solve = solve_maximin_fixed_point(ext, init, tol);
  rep.deviation_gaps = verify_nash(ext.game, rep.solve.equilibrium_x, tol);
  rep.zero_sum_residual = zero_sum_residual(ext, 1000, seed);

  const bool f_ok = subsidy_player_optimal(ext, rep.solve.equilibrium_x, tol);
  rep.theorem1_passed =
      f_ok && (rep.deviation_gaps.array() <= tol.eq_tol).all() &&
      std::abs(rep.solve.equilibrium_f - ext.a) <= tol.eq_tol;

  rep.sion_reports.reserve(n);
  bool sion_ok = true;
  for (int i = 0; i < n; ++i) {
    rep.sion_reports.push_back(
        sion_check(ext, i, drop_coordinate(rep.solve.equilibrium_x, i), tol));
    sion_ok = sion_ok && rep.sion_reports.back().passed;
  }
  rep.theorem2_passed = sion_ok;
  return rep;
}

VerificationReport verify_theorem2(const ZeroSumExtension& ext,
                                   const Vector& nash_x, const Tolerances& tol,
                                   unsigned int seed) {
  const int n = ext.game.n;
  VerificationReport rep;
  rep.deviation_gaps = verify_nash(ext.game, nash_x, tol);
  for (int i = 0; i < n; ++i) {
    if (rep.deviation_gaps[i] > tol.eq_tol) {
      throw NotANash(i, rep.deviation_gaps[i]);
    }
  }
  rep.zero_sum_residual = zero_sum_residual(ext, 1000, seed);
  rep.theorem1_passed = true;

  rep.solve.equilibrium_x = nash_x;
  rep.solve.equilibrium_f = ext.a;
  rep.solve.values = eval_phi(ext.game, {nash_x, {}});
  rep.solve.converged = true;

  bool ok = true;
  rep.sion_reports.reserve(n);
  for (int i = 0; i < n; ++i) {
    SionReport sr = sion_check(ext, i, drop_coordinate(nash_x, i), tol);
    // The maximin argmax must recover the equilibrium strategy itself.
    ok = ok && sr.passed && std::abs(sr.arg_x - nash_x[i]) <= tol.eq_tol;
    rep.sion_reports.push_back(std::move(sr));
  }
  rep.theorem2_passed = ok;
  return rep;
}

}  // namespace zsg
