#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "crp/dp.hpp"
#include "crp/experiments.hpp"
#include "crp/fbs.hpp"
#include "crp/instance.hpp"

// CSV / JSON writers for solver and experiment outputs. CSV numbers use 12
// significant digits; JSON numbers round-trip exactly.

namespace crp::io {

std::string format_csv_number(double v);

/// Columns t, x, A, I, lambda1, lambda2 at every grid point. Adjoint
/// columns are left empty when no adjoint is given.
std::string trajectory_csv(const ControlPolicy& x, const StateTrajectory& state,
                           const AdjointTrajectory* adjoint);

/// Columns iteration, sup_norm.
std::string convergence_csv(const SolveReport& report);

/// Columns policy, J, iterations, converged. Row "fbs" first, then the
/// random policies by stream index.
std::string comparison_csv(const RandomComparison& cmp);

/// Columns value, J, iterations, converged.
std::string sweep_csv(const SweepResult& result);

nlohmann::ordered_json instance_json(const CrpInstance& inst);
nlohmann::ordered_json fbs_config_json(const FbsConfig& cfg, GridConfig grid);
nlohmann::ordered_json dp_config_json(const DpConfig& cfg, double resolved_bound);
nlohmann::ordered_json solve_report_json(const CrpInstance& inst, const SolveReport& report,
                                         const FbsConfig& cfg, GridConfig grid);
nlohmann::ordered_json trend_json(const TrendVerdict& verdict, TrendMode mode);

std::string_view stage_reward_mode_name(StageRewardMode mode);

/// Writes text to a file, throwing std::runtime_error on I/O failure.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace crp::io
