#ifndef ZSG_GAMES_HPP
#define ZSG_GAMES_HPP

#include <array>
#include <vector>

#include "zsg/core.hpp"

namespace zsg {

/// Three-firm differentiated-goods Cournot market with linear inverse
/// demand p_i = demand_intercept - x_i - b * (sum of rival outputs)
/// and constant unit costs.
struct CournotSpec {
  double demand_intercept = 10.0;
  double b = 0.5;  // substitutability, 0 <= b < 1
  std::array<double, 3> c{1.0, 1.0, 1.0};
  double output_bound = 0.0;  // 0 means "use demand_intercept"

  double bound() const {
    return output_bound > 0.0 ? output_bound : demand_intercept;
  }
};

/// Random-testable concave family:
///   phi_i(x) = own_i * x_i^2 + linear_i * x_i
///            + x_i * sum_{j != i} cross[i][j] * x_j + constant_i,
/// own_i strictly negative.
struct QuadraticGameSpec {
  int n = 0;
  std::vector<double> own;                  // strictly negative
  std::vector<double> linear;
  std::vector<std::vector<double>> cross;   // n x n, diagonal ignored
  std::vector<double> constant;             // optional, defaults to 0
  std::vector<Interval> bounds;
};

/// Builds and validates the 3-firm Cournot main game.
MainGame cournot_game(const CournotSpec& spec);

/// The closed-form equilibrium outputs of the differentiated triopoly.
/// Throws NegativeOutput outside the interior-equilibrium regime.
std::array<double, 3> cournot_closed_form(const CournotSpec& spec);

/// Builds and validates a quadratic game instance.
MainGame quadratic_game(const QuadraticGameSpec& spec);

/// n-firm symmetric Cournot market (all cross-effects equal b, per-firm
/// costs c). An extension of the three-firm family for scaling tests.
MainGame symmetric_cournot_game(int n, double demand_intercept, double b,
                                const std::vector<double>& c,
                                double output_bound);

}  // namespace zsg

#endif
