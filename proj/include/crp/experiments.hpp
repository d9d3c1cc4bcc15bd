#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crp/dp.hpp"
#include "crp/fbs.hpp"
#include "crp/instance.hpp"
#include "crp/trajectory.hpp"

namespace crp {

// ---- random baselines ------------------------------------------------------

/// Independent uniform draws on [0, x_max] at every grid point. Stream `k`
/// of a seed is the k-th policy of a comparison set.
ControlPolicy random_feasible_policy(const TimeGrid& grid, double x_max, std::uint64_t seed,
                                     std::uint64_t stream = 0);

struct RandomComparison {
  double fbs_objective = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> random_objectives;  ///< in stream order 0..count-1
  double fraction_beaten = 0.0;           ///< share of random J strictly below the sweep's J
};

RandomComparison compare_against_random(const CrpInstance& inst, GridConfig grid,
                                        const FbsConfig& cfg, std::size_t count,
                                        std::uint64_t seed);

/// Same as above with an already computed sweep result.
RandomComparison compare_against_random(const CrpInstance& inst, const SolveReport& fbs,
                                        std::size_t count, std::uint64_t seed);

// ---- policy shape ----------------------------------------------------------

struct PolicyShape {
  bool starts_at_max = false;
  bool non_increasing = false;
  double largest_increase = 0.0;  ///< max over steps of x_{i+1} - x_i (<= 0 if monotone)
  std::size_t largest_increase_at = 0;  ///< index i + 1 of that step
};

/// Checks x(0) == x_max and x_{i+1} - x_i <= tolerance * x_max at every step.
PolicyShape check_policy_shape(const ControlPolicy& x, double tolerance = 1e-6);

// ---- sensitivity sweeps ----------------------------------------------------

enum class TrendMode { Increasing, Decreasing, IncreasingSaturating };

std::string_view trend_name(TrendMode mode);
TrendMode parse_trend(std::string_view name);
/// Direction each swept parameter is expected to move J.
TrendMode expected_trend(Parameter p);

struct TrendVerdict {
  bool trivial = false;  ///< fewer than two points
  bool pass = false;
  std::optional<std::size_t> failing_index;  ///< first index whose step breaks the trend
  std::string detail;
};

/// Successive-difference test with relative tolerance 1e-6. The saturating
/// mode also needs the mean step of the last quarter to be below 25% of the
/// mean step of the first quarter. Throws on length mismatch or fewer than
/// two points.
TrendVerdict check_trend(std::span<const double> values, std::span<const double> objectives,
                         TrendMode mode);

struct SweepSpec {
  CrpInstance base;
  Parameter parameter = Parameter::T;
  std::vector<double> values;
  TrendMode trend = TrendMode::Increasing;
  std::uint64_t seed = 0;

  /// Nonempty, strictly increasing values; every substituted instance valid.
  void validate() const;
};

struct SweepRecord {
  double value = 0.0;
  double objective = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct SweepResult {
  Parameter parameter = Parameter::T;
  TrendMode trend = TrendMode::Increasing;
  std::vector<SweepRecord> records;  ///< in the order of spec.values
  TrendVerdict verdict;
};

SweepResult run_sweep(const SweepSpec& spec, GridConfig grid, const FbsConfig& cfg);

// ---- sweep vs dynamic programming -------------------------------------------

struct DpComparison {
  double fbs_objective = 0.0;
  double dp_objective = 0.0;     ///< J of the DP rollout, scored on the sweep's grid
  double ratio = 0.0;            ///< dp_objective / fbs_objective
  double fbs_total_variation = 0.0;
  double dp_total_variation = 0.0;
  std::size_t fbs_iterations = 0;
  bool fbs_converged = false;
  bool grid_bound_exceeded = false;
  double fbs_seconds = 0.0;
  double dp_seconds = 0.0;
  std::vector<double> dp_controls;   ///< one per DP step
  std::vector<double> fbs_controls;  ///< on the sweep grid
};

DpComparison compare_fbs_dp(const CrpInstance& inst, GridConfig grid, const FbsConfig& fbs_cfg,
                            const DpConfig& dp_cfg);

// ---- replicated claims -------------------------------------------------------

struct ReplicationSummary {
  std::size_t bases = 0;
  std::size_t converged = 0;
  std::size_t beat_all_random = 0;
  std::size_t decreasing_from_max = 0;
  std::size_t max_iterations = 0;
};

/// Re-runs the convergence / superiority / shape claims on `bases` random
/// instances drawn around m1 (each rate and weight scaled by a factor in
/// [0.75, 1.25]), each against `policies` random feasible policies.
ReplicationSummary replicate_claims(std::size_t bases, std::size_t policies, std::uint64_t seed,
                                    GridConfig grid, const FbsConfig& cfg);

}  // namespace crp
