#include "crp/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crp::io {

std::string format_csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string trajectory_csv(const ControlPolicy& x, const StateTrajectory& state,
                           const AdjointTrajectory* adjoint) {
  std::ostringstream out;
  out << "t,x,A,I,lambda1,lambda2\n";
  const TimeGrid& grid = x.grid();
  for (std::size_t i = 0; i < grid.points(); ++i) {
    out << format_csv_number(grid.time(i)) << ',' << format_csv_number(x[i]) << ','
        << format_csv_number(state.active[i]) << ',' << format_csv_number(state.inactive[i])
        << ',';
    if (adjoint != nullptr) {
      out << format_csv_number(adjoint->lambda1[i]) << ','
          << format_csv_number(adjoint->lambda2[i]);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string convergence_csv(const SolveReport& report) {
  std::ostringstream out;
  out << "iteration,sup_norm\n";
  for (std::size_t k = 0; k < report.sup_norm_history.size(); ++k) {
    out << (k + 1) << ',' << format_csv_number(report.sup_norm_history[k]) << '\n';
  }
  return out.str();
}

std::string comparison_csv(const RandomComparison& cmp) {
  std::ostringstream out;
  out << "policy,J,iterations,converged\n";
  out << "fbs," << format_csv_number(cmp.fbs_objective) << ',' << cmp.iterations << ','
      << (cmp.converged ? "true" : "false") << '\n';
  for (std::size_t i = 0; i < cmp.random_objectives.size(); ++i) {
    out << "random_" << i << ',' << format_csv_number(cmp.random_objectives[i]) << ",,\n";
  }
  return out.str();
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "value,J,iterations,converged\n";
  for (const SweepRecord& r : result.records) {
    out << format_csv_number(r.value) << ',' << format_csv_number(r.objective) << ','
        << r.iterations << ',' << (r.converged ? "true" : "false") << '\n';
  }
  return out.str();
}

nlohmann::ordered_json instance_json(const CrpInstance& inst) {
  return {{"A0", inst.A0},         {"I0", inst.I0},
          {"T", inst.T},           {"x_max", inst.x_max},
          {"mu", inst.mu},         {"delta1", inst.delta1},
          {"delta2", inst.delta2}, {"alpha", inst.alpha},
          {"beta1", inst.beta1.to_string()}, {"beta2", inst.beta2.to_string()},
          {"omega1", inst.omega1}, {"omega2", inst.omega2}};
}

nlohmann::ordered_json fbs_config_json(const FbsConfig& cfg, GridConfig grid) {
  return {{"grid", grid.intervals},
          {"epsilon", cfg.epsilon},
          {"max_iterations", cfg.max_iterations},
          {"relaxation", cfg.relaxation}};
}

std::string_view stage_reward_mode_name(StageRewardMode mode) {
  return mode == StageRewardMode::Corrected ? "corrected" : "paper-literal";
}

nlohmann::ordered_json dp_config_json(const DpConfig& cfg, double resolved_bound) {
  return {{"N", cfg.N},
          {"M", cfg.M},
          {"P", cfg.P},
          {"S", resolved_bound},
          {"lambda", cfg.lambda_reg},
          {"stage_reward_mode", stage_reward_mode_name(cfg.mode)}};
}

nlohmann::ordered_json solve_report_json(const CrpInstance& inst, const SolveReport& report,
                                         const FbsConfig& cfg, GridConfig grid) {
  return {{"instance", instance_json(inst)},
          {"config", fbs_config_json(cfg, grid)},
          {"J", report.objective},
          {"iterations", report.iterations},
          {"converged", report.converged},
          {"sup_norm_history", report.sup_norm_history}};
}

nlohmann::ordered_json trend_json(const TrendVerdict& verdict, TrendMode mode) {
  nlohmann::ordered_json j{{"mode", trend_name(mode)},
                           {"pass", verdict.pass},
                           {"trivial", verdict.trivial},
                           {"detail", verdict.detail}};
  j["failing_index"] = verdict.failing_index ? nlohmann::ordered_json(*verdict.failing_index)
                                             : nlohmann::ordered_json(nullptr);
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace crp::io
