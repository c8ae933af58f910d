#include "zsg/core.hpp"

#include <cmath>
#include <sstream>

namespace zsg {

void check_tolerances(const Tolerances& tol) {
  if (!(tol.opt_tol > 0) || !(tol.fp_tol > 0) || !(tol.eq_tol > 0) ||
      !(tol.tie_tol > 0)) {
    throw BadSpec("tolerances", "all tolerances must be strictly positive");
  }
  if (tol.opt_tol > tol.eq_tol) {
    throw BadSpec("tolerances", "opt_tol must not exceed eq_tol");
  }
  if (tol.scan_points < 3) {
    throw BadSpec("tolerances", "scan_points must be at least 3");
  }
}

namespace {

void check_interval(const Interval& iv) {
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
    std::ostringstream os;
    os << "interval [" << iv.lo << ", " << iv.hi << "] has non-finite bound";
    throw BadInterval(os.str());
  }
  if (!(iv.lo < iv.hi)) {
    std::ostringstream os;
    os << "interval [" << iv.lo << ", " << iv.hi << "] is empty or degenerate";
    throw BadInterval(os.str());
  }
}

constexpr long kMaxProbePoints = 100000;

// Per-axis probe count: 9 by default, shrunk so the product stays under
// the cap for large n.
int probe_points_per_axis(int n) {
  int p = 9;
  while (p > 2) {
    double total = std::pow(static_cast<double>(p), n);
    if (total <= static_cast<double>(kMaxProbePoints)) break;
    --p;
  }
  return p;
}

}  // namespace

MainGame validate_game(MainGame candidate) {
  if (candidate.n <= 0) throw EmptyGame();
  if (static_cast<int>(candidate.spaces.size()) != candidate.n) {
    throw BadSpec("spaces", "expected exactly n strategy spaces");
  }
  if (static_cast<int>(candidate.payoffs.size()) != candidate.n) {
    throw BadSpec("payoffs", "expected exactly n payoff evaluators");
  }
  for (const Interval& iv : candidate.spaces) check_interval(iv);

  const int n = candidate.n;
  const int p = probe_points_per_axis(n);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= p;

  Vector probe(n);
  std::vector<int> idx(n, 0);
  for (long k = 0; k < total; ++k) {
    for (int i = 0; i < n; ++i) {
      const Interval& iv = candidate.spaces[i];
      probe[i] = iv.lo + iv.width() * idx[i] / (p - 1);
    }
    for (int i = 0; i < n; ++i) {
      const double v = candidate.payoffs[i](probe);
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "payoff of player " << (i + 1) << " is non-finite at probe (";
        for (int j = 0; j < n; ++j) os << (j ? ", " : "") << probe[j];
        os << ")";
        throw NonFinitePayoff(
            i, std::vector<double>(probe.data(), probe.data() + n), os.str());
      }
    }
    for (int i = 0; i < n; ++i) {
      if (++idx[i] < p) break;
      idx[i] = 0;
    }
  }
  return candidate;
}

Vector eval_phi(const MainGame& game, const StrategyProfile& profile) {
  if (profile.x.size() != game.n) {
    throw OutOfDomain("profile dimension does not match player count");
  }
  for (int i = 0; i < game.n; ++i) {
    if (!game.spaces[i].contains(profile.x[i])) {
      std::ostringstream os;
      os << "x_" << (i + 1) << " = " << profile.x[i] << " outside ["
         << game.spaces[i].lo << ", " << game.spaces[i].hi << "]";
      throw OutOfDomain(os.str());
    }
  }
  Vector out(game.n);
  for (int i = 0; i < game.n; ++i) out[i] = game.payoffs[i](profile.x);
  return out;
}

}  // namespace zsg
