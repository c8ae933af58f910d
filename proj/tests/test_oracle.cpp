#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "zsg/oracle.hpp"

using namespace zsg;

TEST_CASE("discretize produces inclusive uniform grids") {
  const auto gg = discretize(test::toy_extension(), 3);
  REQUIRE(gg.axes.size() == 2);
  CHECK(gg.axes[0] == std::vector<double>{0.0, 5.0, 10.0});
  CHECK(gg.axes[1] == std::vector<double>{0.0, 2.5, 5.0});
  CHECK(gg.payoff_tables[0].size() == 9);
  CHECK(gg.payoff_tables[1].size() == 9);
}

TEST_CASE("discretize table sizes on cournot") {
  const auto gg = discretize(test::cournot_extension(test::symmetric_spec()), 11);
  CHECK(gg.table_size() == 14641);  // 11^4
}

TEST_CASE("discretize rejects bad resolutions") {
  CHECK_THROWS_AS(discretize(test::toy_extension(), 1), BadSpec);
  CHECK_THROWS_AS(
      discretize(test::cournot_extension(test::symmetric_spec()), 600),
      GridTooLarge);
}

TEST_CASE("grid zero-sum identity holds pointwise") {
  const auto gg = discretize(test::cournot_extension(test::asymmetric_spec()), 7);
  for (long k = 0; k < gg.table_size(); ++k) {
    double sum = 0.0, scale = 0.0;
    for (const auto& table : gg.payoff_tables) {
      sum += table[k];
      scale = std::max(scale, std::abs(table[k]));
    }
    CHECK(std::abs(sum) <= 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("brute_maximin on a hand-built 2x2 table") {
  // phi = {x=0: 1, x=1: 2}, psi = {f=0: 0, f=1: 4}
  GridGame gg;
  gg.axes = {{0.0, 1.0}, {0.0, 1.0}};
  gg.payoff_tables = {{1.0, 5.0, 2.0, 6.0},      // pi_1 = phi + psi
                      {-1.0, -5.0, -2.0, -6.0}}; // pi_2 = -phi - psi
  const auto lo = brute_maximin(gg, 0, {});
  CHECK(lo.first == 1);
  CHECK(lo.second == 2.0);
  const auto hi = brute_minimax(gg, 0, {});
  CHECK(hi.first == 0);
  CHECK(hi.second == 2.0);
}

TEST_CASE("brute values approach the continuous values") {
  const auto ext = test::toy_extension();
  const auto gg = discretize(ext, 101);
  const auto lo = brute_maximin(gg, 0, {});
  // continuous maximin value is 0; one grid cell of slack
  CHECK(std::abs(lo.second - 0.0) <= 0.02);
}

TEST_CASE("weak duality is exact on grids") {
  for (int res : {5, 11, 33}) {
    const auto gg = discretize(test::cournot_extension(test::asymmetric_spec()),
                               res);
    std::vector<int> others(2, res / 2);
    for (int i = 0; i < 3; ++i) {
      CHECK(brute_maximin(gg, i, others).second <=
            brute_minimax(gg, i, others).second);
    }
  }
}

TEST_CASE("brute_nash finds the toy equilibrium") {
  const auto gg = discretize(test::toy_extension(), 11);  // grid {0,1,...,10}
  const auto eqs = brute_nash(gg);
  REQUIRE(eqs.size() == 1);
  CHECK(gg.axes[0][eqs[0][0]] == 3.0);
}

TEST_CASE("brute_nash returns everything for a constant payoff") {
  MainGame g;
  g.n = 1;
  g.spaces = {Interval{0.0, 1.0}};
  g.payoffs = {[](const Vector&) { return 0.0; }};
  const auto ext =
      extend(validate_game(std::move(g)), test::quadratic_subsidy(0.5, {0.0, 1.0}));
  const auto eqs = brute_nash(discretize(ext, 5));
  CHECK(eqs.size() == 5);
}

TEST_CASE("brute_nash captures the symmetric cournot equilibrium") {
  CournotSpec spec = test::symmetric_spec();
  spec.output_bound = 6.0;
  const auto ext = test::cournot_extension(spec);
  const auto gg = discretize(ext, 21);  // step 0.3 on [0,6]
  const auto eqs = brute_nash(gg);
  bool found = false;
  for (const auto& e : eqs) {
    if (gg.axes[0][e[0]] == 3.0 && gg.axes[1][e[1]] == 3.0 &&
        gg.axes[2][e[2]] == 3.0) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("oracle agreement shrinks with resolution") {
  const auto ext = test::toy_extension();
  const auto cont = sion_check(ext, 0, Vector(0), Tolerances{});
  double prev = std::numeric_limits<double>::infinity();
  for (int res : {11, 51, 251}) {
    const auto gg = discretize(ext, res);
    const double disc =
        std::abs(brute_maximin(gg, 0, {}).second - cont.maximin_value);
    CHECK(disc <= prev + 1e-15);
    prev = disc;
  }
}
