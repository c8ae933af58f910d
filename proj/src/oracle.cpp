#include "zsg/oracle.hpp"

#include <cmath>

namespace zsg {

long GridGame::flat_index(const std::vector<int>& idx) const {
  long flat = 0;
  for (size_t ax = 0; ax < axes.size(); ++ax) {
    flat = flat * static_cast<long>(axes[ax].size()) + idx[ax];
  }
  return flat;
}

GridGame discretize(const ZeroSumExtension& ext, int resolution) {
  if (resolution < 2) {
    throw BadSpec("resolution", "grid resolution must be at least 2");
  }
  const int n = ext.game.n;
  long total = 1;
  for (int ax = 0; ax < n + 1; ++ax) {
    total *= resolution;
    if (total > 10000000L) {
      throw GridTooLarge("product grid exceeds 1e7 points at resolution " +
                         std::to_string(resolution));
    }
  }

  GridGame gg;
  gg.axes.resize(n + 1);
  for (int ax = 0; ax < n + 1; ++ax) {
    const Interval& iv = (ax < n) ? ext.game.spaces[ax] : ext.subsidy.domain;
    gg.axes[ax].resize(resolution);
    for (int i = 0; i < resolution; ++i) {
      gg.axes[ax][i] =
          (i == resolution - 1) ? iv.hi : iv.lo + iv.width() * i / (resolution - 1);
    }
  }

  gg.payoff_tables.assign(n + 1, std::vector<double>(total));
  std::vector<int> idx(n + 1, 0);
  StrategyProfile p;
  p.x.resize(n);
  for (long flat = 0; flat < total; ++flat) {
    for (int i = 0; i < n; ++i) p.x[i] = gg.axes[i][idx[i]];
    p.f = gg.axes[n][idx[n]];
    const Vector pi = eval_pi(ext, p);
    for (int i = 0; i < n + 1; ++i) gg.payoff_tables[i][flat] = pi[i];
    for (int ax = n; ax >= 0; --ax) {
      if (++idx[ax] < resolution) break;
      idx[ax] = 0;
    }
  }
  return gg;
}

namespace {

std::vector<int> full_index(const GridGame& gg, int player,
                            const std::vector<int>& others_idx, int xi_idx,
                            int f_idx) {
  const int n = gg.n();
  std::vector<int> idx(n + 1);
  for (int j = 0, k = 0; j < n; ++j) {
    idx[j] = (j == player) ? xi_idx : others_idx[k++];
  }
  idx[n] = f_idx;
  return idx;
}

}  // namespace

std::pair<int, double> brute_maximin(const GridGame& gg, int player,
                                     const std::vector<int>& others_idx) {
  const int n = gg.n();
  const auto& table = gg.payoff_tables[player];
  const int nx = static_cast<int>(gg.axes[player].size());
  const int nf = static_cast<int>(gg.axes[n].size());

  int best_i = 0;
  double best_v = 0.0;
  for (int i = 0; i < nx; ++i) {
    double inner = table[gg.flat_index(full_index(gg, player, others_idx, i, 0))];
    for (int j = 1; j < nf; ++j) {
      const double v =
          table[gg.flat_index(full_index(gg, player, others_idx, i, j))];
      if (v < inner) inner = v;
    }
    if (i == 0 || inner > best_v) {
      best_i = i;
      best_v = inner;
    }
  }
  return {best_i, best_v};
}

std::pair<int, double> brute_minimax(const GridGame& gg, int player,
                                     const std::vector<int>& others_idx) {
  const int n = gg.n();
  const auto& table = gg.payoff_tables[player];
  const int nx = static_cast<int>(gg.axes[player].size());
  const int nf = static_cast<int>(gg.axes[n].size());

  int best_j = 0;
  double best_v = 0.0;
  for (int j = 0; j < nf; ++j) {
    double inner = table[gg.flat_index(full_index(gg, player, others_idx, 0, j))];
    for (int i = 1; i < nx; ++i) {
      const double v =
          table[gg.flat_index(full_index(gg, player, others_idx, i, j))];
      if (v > inner) inner = v;
    }
    if (j == 0 || inner < best_v) {
      best_j = j;
      best_v = inner;
    }
  }
  return {best_j, best_v};
}

std::vector<std::vector<int>> brute_nash(const GridGame& gg) {
  const int n = gg.n();
  // Deviations in x_i at a fixed f index compare phi directly, since
  // pi_i and phi_i differ by the same psi(f) at every x.
  std::vector<std::vector<int>> equilibria;
  std::vector<int> idx(n + 1, 0);  // f index pinned at 0

  const auto profile_count = [&] {
    long c = 1;
    for (int i = 0; i < n; ++i) c *= static_cast<long>(gg.axes[i].size());
    return c;
  }();

  for (long k = 0; k < profile_count; ++k) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      const double here = gg.payoff_tables[i][gg.flat_index(idx)];
      const int saved = idx[i];
      for (size_t alt = 0; alt < gg.axes[i].size(); ++alt) {
        idx[i] = static_cast<int>(alt);
        if (gg.payoff_tables[i][gg.flat_index(idx)] > here) {
          stable = false;
          break;
        }
      }
      idx[i] = saved;
    }
    if (stable) equilibria.emplace_back(idx.begin(), idx.begin() + n);
    for (int ax = n - 1; ax >= 0; --ax) {
      if (++idx[ax] < static_cast<int>(gg.axes[ax].size())) break;
      idx[ax] = 0;
    }
  }
  return equilibria;
}

}  // namespace zsg
