#include "crp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "crp/dp.hpp"
#include "crp/experiments.hpp"
#include "crp/fbs.hpp"
#include "crp/instance_io.hpp"
#include "crp/objective.hpp"
#include "crp/ode.hpp"
#include "crp/report_io.hpp"

namespace crp::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string instance;
  std::string out_dir;
  bool force = false;
  bool strict = false;
  bool timing = false;
  double epsilon = 1e-6;
  std::size_t grid = 5000;
  std::size_t max_iter = 100;
  double relaxation = 0.0;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::string dp = "50,400,50,0.1";
  std::string dp_mode = "corrected";
  std::string policy = "zero";
  std::string param;
  std::string values;
  std::string trend;
};

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("'" + s + "' is not a number");
  }
  if (used != s.size() || !std::isfinite(v)) throw UsageError("'" + s + "' is not a finite number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

DpConfig dp_config(const Options& o) {
  const auto parts = split(o.dp, ',');
  if (parts.size() != 4) throw UsageError("--dp expects N,M,P,lambda");
  DpConfig cfg;
  const auto count = [](const std::string& s) {
    const double v = parse_double(s);
    if (v < 1 || v != std::floor(v)) throw UsageError("--dp counts must be positive integers");
    return static_cast<std::size_t>(v);
  };
  cfg.N = count(parts[0]);
  cfg.M = count(parts[1]);
  cfg.P = count(parts[2]);
  cfg.lambda_reg = parse_double(parts[3]);
  if (o.dp_mode == "corrected") {
    cfg.mode = StageRewardMode::Corrected;
  } else if (o.dp_mode == "paper-literal") {
    cfg.mode = StageRewardMode::Literal;
  } else {
    throw UsageError("--dp-mode must be corrected or paper-literal");
  }
  return cfg;
}

FbsConfig fbs_config(const Options& o) {
  FbsConfig cfg{o.epsilon, o.max_iter, o.relaxation};
  cfg.validate();
  return cfg;
}

// Refuses to overwrite existing outputs unless --force.
class OutputDir {
 public:
  OutputDir(const Options& o, std::vector<std::string> files) : dir_(o.out_dir) {
    fs::create_directories(dir_);
    for (const auto& f : files) {
      if (fs::exists(dir_ / f) && !o.force) {
        throw UsageError((dir_ / f).string() + " exists; pass --force to overwrite");
      }
    }
  }
  void write(const std::string& name, const std::string& text) const {
    io::write_file(dir_ / name, text);
  }
  void write_json(const std::string& name, const ordered_json& j) const {
    write(name, j.dump(2) + "\n");
  }

 private:
  fs::path dir_;
};

CrpInstance load(const Options& o, std::ostream& err) {
  ParsedInstance parsed = load_instance(o.instance);
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  return parsed.instance;
}

ControlPolicy policy_from_flag(const std::string& spec, const CrpInstance& inst,
                               const TimeGrid& grid) {
  if (spec == "zero") return ControlPolicy::constant(grid, 0.0, inst.x_max);
  if (spec == "max") return ControlPolicy::constant(grid, inst.x_max, inst.x_max);
  if (spec.rfind("constant:", 0) == 0) {
    return ControlPolicy::constant(grid, parse_double(spec.substr(9)), inst.x_max);
  }
  // Otherwise a CSV whose second column holds x at every grid point.
  std::ifstream in(spec);
  if (!in) throw UsageError("--policy must be zero, max, constant:<v> or a readable CSV file");
  std::string line;
  std::getline(in, line);
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() < 2) throw UsageError("policy CSV rows need at least t,x");
    values.push_back(parse_double(cols[1]));
  }
  if (values.size() != grid.points()) {
    throw UsageError("policy CSV has " + std::to_string(values.size()) + " rows; grid needs " +
                     std::to_string(grid.points()));
  }
  return {grid, std::move(values), inst.x_max};
}

void maybe_time(ordered_json& report, const Options& o, double seconds) {
  if (o.timing) report["runtime_seconds"] = seconds;
}

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const CrpInstance inst = load(o, err);
  const FbsConfig cfg = fbs_config(o);
  const OutputDir dir(o, {"policy.csv", "convergence.csv", "report.json"});
  const auto t0 = Clock::now();
  const SolveReport r = sweep(inst, GridConfig{o.grid}, cfg);
  const double seconds = since(t0);

  dir.write("policy.csv", io::trajectory_csv(r.final_policy, r.state, &r.adjoint));
  dir.write("convergence.csv", io::convergence_csv(r));
  ordered_json report = io::solve_report_json(inst, r, cfg, GridConfig{o.grid});
  maybe_time(report, o, seconds);
  dir.write_json("report.json", report);

  out << "J = " << io::format_csv_number(r.objective) << " after " << r.iterations
      << " iterations (" << (r.converged ? "converged" : "not converged") << ")\n";
  return (!r.converged && o.strict) ? kNotConverged : kOk;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const CrpInstance inst = load(o, err);
  const TimeGrid grid(inst.T, o.grid);
  const ControlPolicy x = policy_from_flag(o.policy, inst, grid);
  const OutputDir dir(o, {"trajectory.csv", "report.json"});
  const StateTrajectory state = integrate_state_forward(inst, x);
  const double j = cost_benefit(state, x, inst);

  dir.write("trajectory.csv", io::trajectory_csv(x, state, nullptr));
  dir.write_json("report.json", ordered_json{{"instance", io::instance_json(inst)},
                                             {"grid", o.grid},
                                             {"policy", o.policy},
                                             {"J", j}});
  out << "J = " << io::format_csv_number(j) << '\n';
  return kOk;
}

int cmd_solve_dp(const Options& o, std::ostream& out, std::ostream& err) {
  const CrpInstance inst = load(o, err);
  const DpConfig cfg = dp_config(o);
  if (cfg.N < 2) throw UsageError("solve-dp needs N >= 2 to write a policy");
  const OutputDir dir(o, {"policy.csv", "report.json"});
  const auto t0 = Clock::now();
  const DpTables tables = dp_solve(inst, cfg);
  const DpRollout rollout = dp_rollout(inst, cfg, tables);
  const double seconds = since(t0);

  const ControlPolicy coarse = dp_rollout_policy(inst, rollout);
  StateTrajectory states{coarse.grid(), {}, {}};
  for (const Vec2& s : rollout.states) {
    states.active.push_back(s[0]);
    states.inactive.push_back(s[1]);
  }
  const double j = evaluate_policy(
      inst, resample_piecewise_constant(rollout.controls, inst.T, inst.x_max, GridConfig{o.grid}));

  dir.write("policy.csv", io::trajectory_csv(coarse, states, nullptr));
  ordered_json report{{"instance", io::instance_json(inst)},
                      {"config", io::dp_config_json(cfg, tables.S())},
                      {"evaluation_grid", o.grid},
                      {"J", j},
                      {"grid_bound_exceeded", rollout.grid_bound_exceeded},
                      {"clamped_transitions", tables.clamped_transitions()}};
  maybe_time(report, o, seconds);
  dir.write_json("report.json", report);
  if (rollout.grid_bound_exceeded) err << "warning: DP transitions left [0, S] and were clamped\n";
  out << "J = " << io::format_csv_number(j) << '\n';
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const CrpInstance inst = load(o, err);
  const FbsConfig cfg = fbs_config(o);
  if (o.count < 1) throw UsageError("--count must be >= 1");
  const OutputDir dir(o, {"compare.csv", "summary.json"});
  const RandomComparison cmp =
      compare_against_random(inst, GridConfig{o.grid}, cfg, o.count, o.seed);

  dir.write("compare.csv", io::comparison_csv(cmp));
  const double best = *std::max_element(cmp.random_objectives.begin(), cmp.random_objectives.end());
  dir.write_json("summary.json", ordered_json{{"instance", io::instance_json(inst)},
                                              {"config", io::fbs_config_json(cfg, GridConfig{o.grid})},
                                              {"count", o.count},
                                              {"seed", o.seed},
                                              {"J_fbs", cmp.fbs_objective},
                                              {"iterations", cmp.iterations},
                                              {"converged", cmp.converged},
                                              {"best_random_J", best},
                                              {"fraction_beaten", cmp.fraction_beaten}});
  out << "fraction beaten = " << cmp.fraction_beaten << '\n';
  return (!cmp.converged && o.strict) ? kNotConverged : kOk;
}

int cmd_compare_dp(const Options& o, std::ostream& out, std::ostream& err) {
  const CrpInstance inst = load(o, err);
  const FbsConfig fcfg = fbs_config(o);
  const DpConfig dcfg = dp_config(o);
  const OutputDir dir(o, {"compare_dp.csv", "report.json"});
  const DpComparison c = compare_fbs_dp(inst, GridConfig{o.grid}, fcfg, dcfg);

  std::ostringstream csv;
  csv << "step,t,x_dp\n";
  const double h = inst.T / static_cast<double>(dcfg.N);
  for (std::size_t i = 0; i < c.dp_controls.size(); ++i) {
    csv << i << ',' << io::format_csv_number(h * static_cast<double>(i)) << ','
        << io::format_csv_number(c.dp_controls[i]) << '\n';
  }
  dir.write("compare_dp.csv", csv.str());

  ordered_json report{{"instance", io::instance_json(inst)},
                      {"fbs_config", io::fbs_config_json(fcfg, GridConfig{o.grid})},
                      {"dp_config", io::dp_config_json(dcfg, dcfg.bound(inst))},
                      {"J_fbs", c.fbs_objective},
                      {"J_dp", c.dp_objective},
                      {"ratio", c.ratio},
                      {"total_variation_fbs", c.fbs_total_variation},
                      {"total_variation_dp", c.dp_total_variation},
                      {"fbs_iterations", c.fbs_iterations},
                      {"fbs_converged", c.fbs_converged},
                      {"grid_bound_exceeded", c.grid_bound_exceeded}};
  if (dcfg.mode == StageRewardMode::Literal) {
    report["stage_reward_note"] =
        "paper-literal scoring rewards inactive participants and adds +lambda*x^2; "
        "it does not optimize the cost-benefit objective, so J_dp is not comparable";
  }
  if (o.timing) {
    report["fbs_seconds"] = c.fbs_seconds;
    report["dp_seconds"] = c.dp_seconds;
  }
  dir.write_json("report.json", report);
  out << "J_fbs = " << io::format_csv_number(c.fbs_objective)
      << ", J_dp = " << io::format_csv_number(c.dp_objective) << '\n';
  return (!c.fbs_converged && o.strict) ? kNotConverged : kOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const CrpInstance inst = load(o, err);
  const FbsConfig cfg = fbs_config(o);
  SweepSpec spec;
  spec.base = inst;
  try {
    spec.parameter = parse_parameter(o.param);
    spec.trend = o.trend.empty() ? expected_trend(spec.parameter) : parse_trend(o.trend);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.values = parse_value_list(o.values);
  spec.seed = o.seed;
  const OutputDir dir(o, {"sweep.csv", "summary.json"});
  const SweepResult result = run_sweep(spec, GridConfig{o.grid}, cfg);

  dir.write("sweep.csv", io::sweep_csv(result));
  bool all_converged = true;
  for (const auto& r : result.records) all_converged = all_converged && r.converged;
  dir.write_json("summary.json", ordered_json{{"base", io::instance_json(inst)},
                                              {"config", io::fbs_config_json(cfg, GridConfig{o.grid})},
                                              {"parameter", parameter_name(spec.parameter)},
                                              {"values", spec.values},
                                              {"all_converged", all_converged},
                                              {"trend", io::trend_json(result.verdict, spec.trend)}});
  out << "trend " << trend_name(spec.trend) << ": " << (result.verdict.pass ? "pass" : "fail")
      << '\n';
  return (!all_converged && o.strict) ? kNotConverged : kOk;
}

}  // namespace

std::vector<double> parse_value_list(const std::string& text) {
  if (text.empty()) throw UsageError("--values is empty");
  const auto range = split(text, ':');
  std::vector<double> values;
  if (range.size() == 3) {
    const double first = parse_double(range[0]);
    const double step = parse_double(range[1]);
    const double last = parse_double(range[2]);
    if (!(step > 0.0) || last < first) throw UsageError("--values range needs step > 0, a <= b");
    const auto n = static_cast<long>(std::floor((last - first) / step + 1e-9));
    for (long i = 0; i <= n; ++i) values.push_back(first + step * static_cast<double>(i));
    return values;
  }
  if (range.size() != 1) throw UsageError("--values expects a:step:b or a comma list");
  for (const auto& item : split(text, ',')) values.push_back(parse_double(item));
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Company response policy solver", "crp"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "instance file (key = value lines)")->required();
    sub->add_option("--out", o.out_dir, "output directory")->required();
    sub->add_flag("--force", o.force, "overwrite existing outputs");
    sub->add_option("--grid", o.grid, "number of time subintervals N")->check(CLI::Range(2, 10000000));
  };
  const auto fbs_flags = [&](CLI::App* sub) {
    sub->add_option("--epsilon", o.epsilon, "sup-norm convergence threshold");
    sub->add_option("--max-iter", o.max_iter, "maximum sweep iterations");
    sub->add_option("--relaxation", o.relaxation, "blend weight of the previous policy, in [0, 1)");
    sub->add_flag("--strict", o.strict, "exit 2 when the sweep does not converge");
    sub->add_flag("--timing", o.timing, "record runtime in the JSON report");
  };
  const auto dp_flags = [&](CLI::App* sub) {
    sub->add_option("--dp", o.dp, "N,M,P,lambda");
    sub->add_option("--dp-mode", o.dp_mode, "corrected or paper-literal");
  };

  auto* solve = app.add_subcommand("solve", "forward-backward sweep");
  common(solve);
  fbs_flags(solve);

  auto* solve_dp = app.add_subcommand("solve-dp", "dynamic-programming baseline");
  common(solve_dp);
  dp_flags(solve_dp);
  solve_dp->add_flag("--timing", o.timing, "record runtime in the JSON report");

  auto* simulate = app.add_subcommand("simulate", "state trajectory under a given policy");
  common(simulate);
  simulate->add_option("--policy", o.policy, "zero, max, constant:<v>, or a policy CSV");

  auto* compare = app.add_subcommand("compare", "sweep policy vs random feasible policies");
  common(compare);
  fbs_flags(compare);
  compare->add_option("--seed", o.seed, "random-policy seed");
  compare->add_option("--count", o.count, "number of random policies");

  auto* compare_dp = app.add_subcommand("compare-dp", "sweep vs dynamic programming");
  common(compare_dp);
  fbs_flags(compare_dp);
  dp_flags(compare_dp);

  auto* sweep_cmd = app.add_subcommand("sweep", "one-parameter sensitivity sweep");
  common(sweep_cmd);
  fbs_flags(sweep_cmd);
  sweep_cmd->add_option("--param", o.param, "T, x_max, mu, delta1, delta2, alpha, omega1, omega2")
      ->required();
  sweep_cmd->add_option("--values", o.values, "a:step:b or v1,v2,...")->required();
  sweep_cmd->add_option("--trend", o.trend,
                        "increasing, decreasing or increasing_saturating (default by parameter)");
  sweep_cmd->add_option("--seed", o.seed, "seed recorded with the sweep");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (solve_dp->parsed()) return cmd_solve_dp(o, out, err);
    if (simulate->parsed()) return cmd_simulate(o, out, err);
    if (compare->parsed()) return cmd_compare(o, out, err);
    if (compare_dp->parsed()) return cmd_compare_dp(o, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace crp::cli
