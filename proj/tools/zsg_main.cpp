// Command-line front end: config ingestion, command dispatch and
// report emission for the zero-sum embedding toolkit.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zsg/games.hpp"
#include "zsg/oracle.hpp"
#include "zsg/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitVerification = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* k : allowed) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigError("unknown key '" + where + key + "'");
  }
}

double require_number(const json& obj, const std::string& where,
                      const char* key) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw ConfigError("missing or non-numeric field '" + where + key + "'");
  }
  return obj[key].get<double>();
}

struct RunConfig {
  json raw;  // echoed into reports
  zsg::MainGame game;
  zsg::Subsidy subsidy;
  zsg::Tolerances tol;
  double damping = 0.5;
  int max_iter = 10000;
  std::optional<zsg::Vector> init;
  int multi_start = 0;
  unsigned int seed = 0;
  bool is_cournot = false;
  zsg::CournotSpec cournot;
};

zsg::MainGame parse_game(const json& g, RunConfig& cfg) {
  reject_unknown_keys(g, "game.", {"family", "params"});
  if (!g.contains("family") || !g["family"].is_string()) {
    throw ConfigError("missing field 'game.family'");
  }
  const std::string family = g["family"].get<std::string>();
  const json params = g.value("params", json::object());

  if (family == "cournot") {
    reject_unknown_keys(params, "game.params.",
                        {"demand_intercept", "b", "c", "output_bound"});
    zsg::CournotSpec spec;
    spec.demand_intercept =
        require_number(params, "game.params.", "demand_intercept");
    spec.b = require_number(params, "game.params.", "b");
    if (!params.contains("c") || !params["c"].is_array() ||
        params["c"].size() != 3) {
      throw ConfigError("field 'game.params.c' must be an array of 3 costs");
    }
    for (int i = 0; i < 3; ++i) spec.c[i] = params["c"][i].get<double>();
    if (params.contains("output_bound")) {
      spec.output_bound = params["output_bound"].get<double>();
    }
    cfg.is_cournot = true;
    cfg.cournot = spec;
    return zsg::cournot_game(spec);
  }
  if (family == "quadratic") {
    reject_unknown_keys(params, "game.params.",
                        {"n", "own", "linear", "cross", "constant", "bounds"});
    zsg::QuadraticGameSpec spec;
    spec.n = static_cast<int>(require_number(params, "game.params.", "n"));
    spec.own = params.value("own", std::vector<double>{});
    spec.linear = params.value("linear", std::vector<double>{});
    spec.cross = params.value("cross", std::vector<std::vector<double>>{});
    spec.constant = params.value("constant", std::vector<double>{});
    if (!params.contains("bounds") || !params["bounds"].is_array()) {
      throw ConfigError("field 'game.params.bounds' must be an array");
    }
    for (const auto& b : params["bounds"]) {
      if (!b.is_array() || b.size() != 2) {
        throw ConfigError("each entry of 'game.params.bounds' must be [lo, hi]");
      }
      spec.bounds.push_back({b[0].get<double>(), b[1].get<double>()});
    }
    return zsg::quadratic_game(spec);
  }
  throw ConfigError("unknown game family '" + family + "'");
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  reject_unknown_keys(root, "",
                      {"game", "subsidy", "tolerances", "solver", "seed"});

  RunConfig cfg;
  cfg.raw = root;
  if (!root.contains("game")) throw ConfigError("missing field 'game'");
  cfg.game = parse_game(root["game"], cfg);

  if (!root.contains("subsidy")) throw ConfigError("missing field 'subsidy'");
  const json& s = root["subsidy"];
  reject_unknown_keys(s, "subsidy.", {"family", "vertex", "f_bounds"});
  const std::string sfam = s.value("family", std::string("quadratic"));
  if (sfam != "quadratic") {
    throw ConfigError("unknown subsidy family '" + sfam + "'");
  }
  const double vertex = require_number(s, "subsidy.", "vertex");
  if (!s.contains("f_bounds") || !s["f_bounds"].is_array() ||
      s["f_bounds"].size() != 2) {
    throw ConfigError("field 'subsidy.f_bounds' must be [lo, hi]");
  }
  cfg.subsidy.domain = {s["f_bounds"][0].get<double>(),
                        s["f_bounds"][1].get<double>()};
  cfg.subsidy.psi = [vertex](double f) {
    return (f - vertex) * (f - vertex);
  };
  cfg.subsidy.vertex_hint = vertex;

  if (root.contains("tolerances")) {
    const json& t = root["tolerances"];
    reject_unknown_keys(
        t, "tolerances.",
        {"opt_tol", "fp_tol", "eq_tol", "tie_tol", "scan_points"});
    cfg.tol.opt_tol = t.value("opt_tol", cfg.tol.opt_tol);
    cfg.tol.fp_tol = t.value("fp_tol", cfg.tol.fp_tol);
    cfg.tol.eq_tol = t.value("eq_tol", cfg.tol.eq_tol);
    cfg.tol.tie_tol = t.value("tie_tol", cfg.tol.tie_tol);
    cfg.tol.scan_points = t.value("scan_points", cfg.tol.scan_points);
    zsg::check_tolerances(cfg.tol);
  }
  if (root.contains("solver")) {
    const json& sv = root["solver"];
    reject_unknown_keys(sv, "solver.",
                        {"damping", "max_iter", "init", "multi_start"});
    cfg.damping = sv.value("damping", cfg.damping);
    cfg.max_iter = sv.value("max_iter", cfg.max_iter);
    cfg.multi_start = sv.value("multi_start", 0);
    if (sv.contains("init")) {
      const auto v = sv["init"].get<std::vector<double>>();
      if (static_cast<int>(v.size()) != cfg.game.n) {
        throw ConfigError("'solver.init' must have one entry per player");
      }
      cfg.init = Eigen::Map<const zsg::Vector>(v.data(), v.size());
    }
  }
  cfg.seed = root.value("seed", 0u);
  return cfg;
}

void emit_error(const std::string& type, const std::string& message) {
  json rec;
  rec["error"]["type"] = type;
  rec["error"]["message"] = message;
  std::cerr << rec.dump() << "\n";
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void emit_report(const json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    const auto& eq = report["equilibrium"]["x"];
    const auto& vals = report["values"];
    std::cout << "player,x,value\n";
    for (size_t i = 0; i < eq.size(); ++i) {
      std::cout << (i + 1) << "," << eq[i].get<double>() << ","
                << vals[i].get<double>() << "\n";
    }
    std::cout << "subsidy_player,"
              << report["equilibrium"]["f"].get<double>() << ",\n";
    return;
  }
  // table
  const auto& eq = report["equilibrium"]["x"];
  const auto& vals = report["values"];
  std::cout << "player  x          value\n";
  for (size_t i = 0; i < eq.size(); ++i) {
    std::cout << (i + 1) << "       " << fmt6(eq[i].get<double>()) << "    "
              << fmt6(vals[i].get<double>()) << "\n";
  }
  std::cout << "f = " << fmt6(report["equilibrium"]["f"].get<double>()) << "\n";
  if (report.contains("iterations")) {
    std::cout << "iterations = " << report["iterations"].get<int>() << "\n";
  }
  if (report.contains("sion")) {
    std::cout << "pair  gap          arg_f       passed\n";
    for (const auto& sr : report["sion"]) {
      std::cout << sr["player"].get<int>() + 1 << "     "
                << fmt6(sr["gap"].get<double>()) << "    "
                << fmt6(sr["arg_f"].get<double>()) << "    "
                << (sr["passed"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  if (report.contains("theorem1_passed")) {
    std::cout << "theorem1: "
              << (report["theorem1_passed"].get<bool>() ? "pass" : "FAIL")
              << "  theorem2: "
              << (report["theorem2_passed"].get<bool>() ? "pass" : "FAIL")
              << "\n";
  }
}

json solve_to_json(const zsg::SolveReport& rep) {
  json j;
  j["x"] = std::vector<double>(rep.equilibrium_x.data(),
                               rep.equilibrium_x.data() +
                                   rep.equilibrium_x.size());
  j["f"] = rep.equilibrium_f;
  return j;
}

json sion_to_json(const std::vector<zsg::SionReport>& reports) {
  json arr = json::array();
  for (const auto& sr : reports) {
    json j;
    j["player"] = sr.player;
    j["maximin"] = sr.maximin_value;
    j["minimax"] = sr.minimax_value;
    j["gap"] = sr.gap;
    j["arg_x"] = sr.arg_x;
    j["arg_f"] = sr.arg_f;
    j["passed"] = sr.passed;
    j["quasiconcave_diag"] = sr.quasiconcave_diag;
    arr.push_back(j);
  }
  return arr;
}

int cmd_solve(const RunConfig& cfg, const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  zsg::ZeroSumExtension ext = zsg::extend(cfg.game, cfg.subsidy, cfg.tol);

  zsg::StrategyProfile init;
  if (cfg.init) {
    init.x = *cfg.init;
  } else {
    init.x.resize(cfg.game.n);
    for (int i = 0; i < cfg.game.n; ++i) init.x[i] = cfg.game.spaces[i].mid();
  }

  zsg::SolveReport rep;
  double start_spread = 0.0;
  try {
    rep = zsg::solve_maximin_fixed_point(ext, init, cfg.tol, cfg.damping,
                                         cfg.max_iter);
    if (cfg.multi_start > 0) {
      std::mt19937 rng(cfg.seed);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (int k = 0; k < cfg.multi_start; ++k) {
        zsg::StrategyProfile p;
        p.x.resize(cfg.game.n);
        for (int i = 0; i < cfg.game.n; ++i) {
          const auto& iv = cfg.game.spaces[i];
          p.x[i] = iv.lo + iv.width() * unit(rng);
        }
        const auto alt = zsg::solve_maximin_fixed_point(ext, p, cfg.tol,
                                                        cfg.damping,
                                                        cfg.max_iter);
        start_spread = std::max(start_spread,
                                (alt.equilibrium_x - rep.equilibrium_x)
                                    .lpNorm<Eigen::Infinity>());
      }
    }
  } catch (const zsg::NonConvergence& e) {
    emit_error("NonConvergence", e.what());
    return kExitNonConvergence;
  }
  const auto t1 = std::chrono::steady_clock::now();

  json report;
  report["inputs"] = cfg.raw;
  report["equilibrium"] = solve_to_json(rep);
  report["values"] = std::vector<double>(rep.values.data(),
                                         rep.values.data() + rep.values.size());
  report["iterations"] = rep.iterations;
  report["residual"] = rep.residual;
  report["seed"] = cfg.seed;
  if (cfg.multi_start > 0) report["multi_start_spread"] = start_spread;
  report["wall_time_s"] =
      std::chrono::duration<double>(t1 - t0).count();
  emit_report(report, format);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::optional<zsg::Vector>& candidate,
               const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  zsg::ZeroSumExtension ext = zsg::extend(cfg.game, cfg.subsidy, cfg.tol);

  zsg::VerificationReport rep;
  try {
    if (candidate) {
      rep = zsg::verify_theorem2(ext, *candidate, cfg.tol, cfg.seed);
    } else {
      rep = zsg::verify_theorem1(ext, cfg.tol, cfg.seed);
    }
  } catch (const zsg::NotANash& e) {
    emit_error("NotANash", e.what());
    return kExitVerification;
  } catch (const zsg::NonConvergence& e) {
    emit_error("NonConvergence", e.what());
    return kExitNonConvergence;
  }
  const auto t1 = std::chrono::steady_clock::now();

  json report;
  report["inputs"] = cfg.raw;
  report["equilibrium"] = solve_to_json(rep.solve);
  report["values"] = std::vector<double>(rep.solve.values.data(),
                                         rep.solve.values.data() +
                                             rep.solve.values.size());
  report["iterations"] = rep.solve.iterations;
  report["deviation_gaps"] =
      std::vector<double>(rep.deviation_gaps.data(),
                          rep.deviation_gaps.data() + rep.deviation_gaps.size());
  report["sion"] = sion_to_json(rep.sion_reports);
  report["zero_sum_residual"] = rep.zero_sum_residual;
  report["theorem1_passed"] = rep.theorem1_passed;
  report["theorem2_passed"] = rep.theorem2_passed;
  report["seed"] = cfg.seed;
  report["wall_time_s"] =
      std::chrono::duration<double>(t1 - t0).count();
  emit_report(report, format);
  return (rep.theorem1_passed && rep.theorem2_passed) ? kExitOk
                                                      : kExitVerification;
}

int cmd_oracle(const RunConfig& cfg, int resolution, const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  zsg::ZeroSumExtension ext = zsg::extend(cfg.game, cfg.subsidy, cfg.tol);
  const zsg::GridGame gg = zsg::discretize(ext, resolution);

  const int n = cfg.game.n;
  const int mid_idx = resolution / 2;
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    std::vector<int> others_idx(n - 1, mid_idx);
    const auto bmax = zsg::brute_maximin(gg, i, others_idx);
    const auto bmin = zsg::brute_minimax(gg, i, others_idx);

    zsg::Vector others(n - 1);
    for (int j = 0, k = 0; j < n; ++j) {
      if (j != i) others[k++] = gg.axes[j][mid_idx];
    }
    const zsg::SionReport cont = zsg::sion_check(ext, i, others, cfg.tol);

    json row;
    row["player"] = i;
    row["brute_maximin"] = bmax.second;
    row["brute_minimax"] = bmin.second;
    row["continuous_maximin"] = cont.maximin_value;
    row["continuous_minimax"] = cont.minimax_value;
    row["maximin_discrepancy"] = std::abs(bmax.second - cont.maximin_value);
    row["minimax_discrepancy"] = std::abs(bmin.second - cont.minimax_value);
    rows.push_back(row);
  }
  const auto t1 = std::chrono::steady_clock::now();

  json report;
  report["inputs"] = cfg.raw;
  report["resolution"] = resolution;
  report["comparison"] = rows;
  report["seed"] = cfg.seed;
  report["wall_time_s"] =
      std::chrono::duration<double>(t1 - t0).count();
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "player  brute_maximin  continuous_maximin  discrepancy\n";
    for (const auto& row : rows) {
      std::cout << row["player"].get<int>() + 1 << "       "
                << fmt6(row["brute_maximin"].get<double>()) << "        "
                << fmt6(row["continuous_maximin"].get<double>()) << "            "
                << fmt6(row["maximin_discrepancy"].get<double>()) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-sum embedding equilibrium toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "table";
  std::optional<unsigned int> seed_flag;
  app.add_option("--config", config_path, "path to a JSON run config")
      ->required();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--seed", seed_flag, "RNG seed override");

  auto* solve = app.add_subcommand("solve", "solve the fixed-point system");
  auto* verify = app.add_subcommand(
      "verify", "verify the equilibrium / minimax equivalences");
  std::string candidate_str;
  verify->add_option("--candidate", candidate_str,
                     "comma-separated profile to verify instead of solving");
  auto* oracle = app.add_subcommand("oracle",
                                    "compare against the brute-force grid");
  int resolution = 11;
  oracle->add_option("--resolution", resolution, "grid points per axis")
      ->required();

  CLI11_PARSE(app, argc, argv);

  RunConfig cfg;
  try {
    cfg = parse_config(config_path);
    if (seed_flag) cfg.seed = *seed_flag;
  } catch (const ConfigError& e) {
    emit_error("ConfigError", e.what());
    return kExitConfig;
  } catch (const zsg::Error& e) {
    emit_error("ValidationError", e.what());
    return kExitConfig;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, format);
    if (verify->parsed()) {
      std::optional<zsg::Vector> candidate;
      if (!candidate_str.empty()) {
        std::vector<double> vals;
        std::stringstream ss(candidate_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        if (static_cast<int>(vals.size()) != cfg.game.n) {
          emit_error("ConfigError",
                     "--candidate must have one entry per player");
          return kExitConfig;
        }
        candidate = Eigen::Map<const zsg::Vector>(vals.data(), vals.size());
      }
      return cmd_verify(cfg, candidate, format);
    }
    if (oracle->parsed()) return cmd_oracle(cfg, resolution, format);
  } catch (const zsg::GridTooLarge& e) {
    emit_error("GridTooLarge", e.what());
    return kExitConfig;
  } catch (const zsg::Error& e) {
    emit_error("Error", e.what());
    return kExitConfig;
  }
  return kExitOk;
}
