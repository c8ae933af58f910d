#ifndef ZSG_ORACLE_HPP
#define ZSG_ORACLE_HPP

#include <utility>
#include <vector>

#include "zsg/embedding.hpp"

namespace zsg {

/// Fully tabulated discretization of a zero-sum extension. axes holds
/// n grids for the main players plus one for f; payoff_tables holds
/// n+1 flat row-major tables over the product grid.
struct GridGame {
  std::vector<std::vector<double>> axes;
  std::vector<std::vector<double>> payoff_tables;

  int n() const { return static_cast<int>(axes.size()) - 1; }
  long table_size() const {
    return static_cast<long>(payoff_tables.empty() ? 0
                                                   : payoff_tables[0].size());
  }
  // Flat index of a full (x_1..x_n, f) grid point; last axis fastest.
  long flat_index(const std::vector<int>& idx) const;
};

/// Uniform grids with both endpoints included; all n+1 tables filled.
/// Throws GridTooLarge when the product grid exceeds 1e7 points.
GridGame discretize(const ZeroSumExtension& ext, int resolution);

/// Exact max over the x_i grid of the min over the f grid, other
/// players pinned at others_idx (length n-1). Leftmost tie-break.
std::pair<int, double> brute_maximin(const GridGame& gg, int player,
                                     const std::vector<int>& others_idx);

/// Mirror: exact min over the f grid of the max over the x_i grid;
/// returns the f grid index.
std::pair<int, double> brute_minimax(const GridGame& gg, int player,
                                     const std::vector<int>& others_idx);

/// All grid profiles (x indices only) where no main player has a
/// strictly better grid deviation in phi_i.
std::vector<std::vector<int>> brute_nash(const GridGame& gg);

}  // namespace zsg

#endif
