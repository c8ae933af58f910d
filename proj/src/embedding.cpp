#include "zsg/embedding.hpp"

#include <cmath>
#include <sstream>

namespace zsg {

Vector insert_coordinate(const Vector& others, int player, double xi) {
  Vector full(others.size() + 1);
  for (int j = 0, k = 0; j < full.size(); ++j) {
    full[j] = (j == player) ? xi : others[k++];
  }
  return full;
}

double subsidy_minimizer(const Subsidy& subsidy, const Tolerances& tol) {
  OptResult res = minimize_1d(subsidy.psi, subsidy.domain, tol.opt_tol, tol);
  if (std::abs(res.value) > tol.eq_tol) {
    throw NonZeroMinimum(res.value, res.arg);
  }
  if (res.multiplicity_flag) {
    throw NonUniqueMinimizer(
        "subsidy minimizer is not unique near f=" + std::to_string(res.arg));
  }
  if (subsidy.vertex_hint &&
      std::abs(res.arg - *subsidy.vertex_hint) > tol.eq_tol) {
    std::ostringstream os;
    os << "computed minimizer " << res.arg << " disagrees with vertex hint "
       << *subsidy.vertex_hint;
    throw NonUniqueMinimizer(os.str());
  }
  return res.arg;
}

ZeroSumExtension extend(MainGame game, Subsidy subsidy, const Tolerances& tol,
                        bool normalize) {
  if (normalize) {
    OptResult res =
        minimize_1d(subsidy.psi, subsidy.domain, tol.opt_tol, tol);
    if (std::abs(res.value) > tol.eq_tol) {
      const double shift = res.value;
      auto psi = subsidy.psi;
      subsidy.psi = [psi, shift](double f) { return psi(f) - shift; };
    }
  }
  ZeroSumExtension ext{std::move(game), std::move(subsidy), 0.0};
  ext.a = subsidy_minimizer(ext.subsidy, tol);
  return ext;
}

Vector eval_pi(const ZeroSumExtension& ext, const StrategyProfile& profile) {
  if (!profile.f) throw MissingSubsidyStrategy();
  if (!ext.subsidy.domain.contains(*profile.f)) {
    throw OutOfDomain("f = " + std::to_string(*profile.f) +
                      " outside the subsidy domain");
  }
  const int n = ext.game.n;
  const Vector phi = eval_phi(ext.game, profile);
  const double psi = ext.subsidy.psi(*profile.f);

  Vector pi(n + 1);
  double phi_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    pi[i] = phi[i] + psi;
    phi_sum += phi[i];
  }
  // pi_{n+1} is built from phi and psi directly, never by negating the
  // sum of the pi_i, so the zero-sum identity cancels algebraically.
  pi[n] = -phi_sum - n * psi;
  return pi;
}

namespace {

// pi_player as a function of (x_i, f) with the other main players fixed.
Objective2d pair_payoff(const ZeroSumExtension& ext, int player,
                        const Vector& others) {
  return [&ext, player, others](double xi, double f) {
    const Vector full = insert_coordinate(others, player, xi);
    return ext.game.payoffs[player](full) + ext.subsidy.psi(f);
  };
}

// Scans phi_i along the player's axis for a strict interior local
// minimum, which would break quasi-concavity in x_i.
bool quasiconcave_on_grid(const ZeroSumExtension& ext, int player,
                          const Vector& others, int points) {
  const Interval& dom = ext.game.spaces[player];
  std::vector<double> vals(points);
  for (int i = 0; i < points; ++i) {
    const double xi = dom.lo + dom.width() * i / (points - 1);
    vals[i] = ext.game.payoffs[player](insert_coordinate(others, player, xi));
  }
  for (int i = 1; i + 1 < points; ++i) {
    if (vals[i] < vals[i - 1] && vals[i] < vals[i + 1]) return false;
  }
  return true;
}

}  // namespace

SionReport sion_check(const ZeroSumExtension& ext, int player,
                      const Vector& others, const Tolerances& tol) {
  const auto obj = pair_payoff(ext, player, others);
  const Interval& x_dom = ext.game.spaces[player];
  const Interval& f_dom = ext.subsidy.domain;

  const OptResult lo = maximin(f_dom, x_dom, obj, tol.opt_tol, tol);
  const OptResult hi = minimax(f_dom, x_dom, obj, tol.opt_tol, tol);

  SionReport rep;
  rep.player = player;
  rep.maximin_value = lo.value;
  rep.minimax_value = hi.value;
  rep.gap = std::abs(lo.value - hi.value);
  rep.arg_x = lo.arg;
  rep.arg_f = hi.arg;
  rep.passed = rep.gap <= tol.eq_tol && std::abs(rep.arg_f - ext.a) <= tol.eq_tol;
  rep.quasiconcave_diag =
      quasiconcave_on_grid(ext, player, others, tol.scan_points);
  return rep;
}

bool argmax_invariance_check(const ZeroSumExtension& ext, int player,
                             const Vector& others,
                             const std::vector<double>& f_samples,
                             const Tolerances& tol) {
  if (f_samples.empty()) {
    throw BadSpec("f_samples", "f_samples must be nonempty");
  }
  const auto obj = pair_payoff(ext, player, others);
  const Interval& x_dom = ext.game.spaces[player];

  bool first = true;
  double ref = 0.0;
  for (double f : f_samples) {
    if (!ext.subsidy.domain.contains(f)) {
      throw OutOfDomain("f sample " + std::to_string(f) +
                        " outside the subsidy domain");
    }
    const OptResult r = maximize_1d([&](double xi) { return obj(xi, f); },
                                    x_dom, tol.opt_tol, tol);
    if (first) {
      ref = r.arg;
      first = false;
    } else if (std::abs(r.arg - ref) > tol.eq_tol) {
      return false;
    }
  }
  return true;
}

}  // namespace zsg
