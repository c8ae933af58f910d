#ifndef ZSG_ERRORS_HPP
#define ZSG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace zsg {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyGame : Error {
  EmptyGame() : Error("game has zero players") {}
};

struct BadInterval : Error {
  explicit BadInterval(const std::string& msg) : Error(msg) {}
};

struct NonFinitePayoff : Error {
  NonFinitePayoff(int player, std::vector<double> profile, const std::string& msg)
      : Error(msg), player(player), profile(std::move(profile)) {}
  int player;
  std::vector<double> profile;
};

struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& msg) : Error(msg) {}
};

struct NonFiniteObjective : Error {
  NonFiniteObjective(double location, const std::string& msg)
      : Error(msg), location(location) {}
  double location;
};

struct NonZeroMinimum : Error {
  NonZeroMinimum(double min_value, double arg)
      : Error("subsidy minimum " + std::to_string(min_value) + " at f=" +
              std::to_string(arg) + " violates min psi = 0"),
        min_value(min_value), arg(arg) {}
  double min_value;
  double arg;
};

struct NonUniqueMinimizer : Error {
  explicit NonUniqueMinimizer(const std::string& msg) : Error(msg) {}
};

struct MissingSubsidyStrategy : Error {
  MissingSubsidyStrategy() : Error("profile has no subsidy strategy f") {}
};

struct NonConvergence : Error {
  NonConvergence(std::vector<double> last_iterate, double residual, int iterations)
      : Error("fixed-point iteration did not converge after " +
              std::to_string(iterations) + " iterations, residual " +
              std::to_string(residual)),
        last_iterate(std::move(last_iterate)), residual(residual),
        iterations(iterations) {}
  std::vector<double> last_iterate;
  double residual;
  int iterations;
};

struct NotANash : Error {
  NotANash(int player, double gap)
      : Error("candidate is not a Nash equilibrium: player " +
              std::to_string(player + 1) + " has deviation gap " +
              std::to_string(gap)),
        player(player), gap(gap) {}
  int player;
  double gap;
};

struct GridTooLarge : Error {
  explicit GridTooLarge(const std::string& msg) : Error(msg) {}
};

struct BadSpec : Error {
  BadSpec(const std::string& field, const std::string& msg)
      : Error(msg), field(field) {}
  std::string field;
};

struct NegativeOutput : Error {
  NegativeOutput(int firm, double value)
      : Error("closed-form output of firm " + std::to_string(firm + 1) +
              " is negative (" + std::to_string(value) + ")"),
        firm(firm), value(value) {}
  int firm;
  double value;
};

}  // namespace zsg

#endif
