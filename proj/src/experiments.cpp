#include "crp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "crp/benchmarks.hpp"
#include "crp/parallel.hpp"
#include "crp/rng.hpp"

namespace crp {

ControlPolicy random_feasible_policy(const TimeGrid& grid, double x_max, std::uint64_t seed,
                                     std::uint64_t stream) {
  if (!(x_max > 0.0)) throw std::invalid_argument("x_max must be > 0");
  UniformStream rng(seed, stream);
  std::vector<double> values(grid.points());
  for (double& v : values) v = rng.next(0.0, x_max);
  return {grid, std::move(values), x_max};
}

RandomComparison compare_against_random(const CrpInstance& inst, const SolveReport& fbs,
                                        std::size_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("random comparison needs count >= 1");
  RandomComparison out;
  out.fbs_objective = fbs.objective;
  out.iterations = fbs.iterations;
  out.converged = fbs.converged;
  out.random_objectives.resize(count);

  const TimeGrid& grid = fbs.final_policy.grid();
  parallel_for(count, [&](std::size_t i) {
    const ControlPolicy x = random_feasible_policy(grid, inst.x_max, seed, i);
    out.random_objectives[i] = evaluate_policy(inst, x);
  });
  const auto beaten = std::count_if(out.random_objectives.begin(), out.random_objectives.end(),
                                    [&](double j) { return j < out.fbs_objective; });
  out.fraction_beaten = static_cast<double>(beaten) / static_cast<double>(count);
  return out;
}

RandomComparison compare_against_random(const CrpInstance& inst, GridConfig grid,
                                        const FbsConfig& cfg, std::size_t count,
                                        std::uint64_t seed) {
  return compare_against_random(inst, sweep(inst, grid, cfg), count, seed);
}

PolicyShape check_policy_shape(const ControlPolicy& x, double tolerance) {
  PolicyShape shape;
  const auto v = x.values();
  shape.starts_at_max = v.front() == x.x_max();
  shape.largest_increase = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double rise = v[i] - v[i - 1];
    if (rise > shape.largest_increase) {
      shape.largest_increase = rise;
      shape.largest_increase_at = i;
    }
  }
  shape.non_increasing = shape.largest_increase <= tolerance * x.x_max();
  return shape;
}

std::string_view trend_name(TrendMode mode) {
  switch (mode) {
    case TrendMode::Increasing: return "increasing";
    case TrendMode::Decreasing: return "decreasing";
    case TrendMode::IncreasingSaturating: return "increasing_saturating";
  }
  return "?";
}

TrendMode parse_trend(std::string_view name) {
  for (TrendMode m : {TrendMode::Increasing, TrendMode::Decreasing,
                      TrendMode::IncreasingSaturating}) {
    if (trend_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown trend mode '" + std::string(name) + "'");
}

TrendMode expected_trend(Parameter p) {
  switch (p) {
    case Parameter::T:
    case Parameter::mu:
    case Parameter::omega2:
      return TrendMode::Increasing;
    case Parameter::x_max:
      return TrendMode::IncreasingSaturating;
    case Parameter::delta1:
    case Parameter::delta2:
    case Parameter::alpha:
    case Parameter::omega1:
      return TrendMode::Decreasing;
  }
  return TrendMode::Increasing;
}

TrendVerdict check_trend(std::span<const double> values, std::span<const double> objectives,
                         TrendMode mode) {
  if (values.size() != objectives.size()) {
    throw std::invalid_argument("trend check: values and objectives differ in length");
  }
  if (values.size() < 2) throw std::invalid_argument("trend check needs at least two points");

  constexpr double kRelTol = 1e-6;
  const double sign = mode == TrendMode::Decreasing ? -1.0 : 1.0;
  std::vector<double> steps;
  TrendVerdict verdict;
  for (std::size_t i = 1; i < objectives.size(); ++i) {
    const double step = objectives[i] - objectives[i - 1];
    const double tol = kRelTol * std::max(std::abs(objectives[i]), std::abs(objectives[i - 1]));
    if (sign * step < -tol) {
      verdict.failing_index = i;
      verdict.detail = "J moves against the expected direction at index " + std::to_string(i);
      return verdict;
    }
    steps.push_back(step);
  }

  if (mode == TrendMode::IncreasingSaturating) {
    const std::size_t q = std::max<std::size_t>(1, steps.size() / 4);
    double first = 0.0, last = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
      first += steps[i];
      last += steps[steps.size() - q + i];
    }
    first /= static_cast<double>(q);
    last /= static_cast<double>(q);
    if (!(last < 0.25 * first)) {
      verdict.detail = "no saturation: last-quarter mean step " + std::to_string(last) +
                       " vs first-quarter mean step " + std::to_string(first);
      return verdict;
    }
  }
  verdict.pass = true;
  verdict.detail = "ok";
  return verdict;
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("sweep has no values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && !(values[i] > values[i - 1])) {
      throw std::invalid_argument("sweep values must be strictly increasing");
    }
    try {
      with_parameter(base, parameter, values[i]).validate();
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("sweep value " + std::to_string(values[i]) + " for " +
                                  std::string(parameter_name(parameter)) +
                                  " gives an invalid instance: " + e.what());
    }
  }
}

SweepResult run_sweep(const SweepSpec& spec, GridConfig grid, const FbsConfig& cfg) {
  spec.validate();
  SweepResult result;
  result.parameter = spec.parameter;
  result.trend = spec.trend;
  result.records.resize(spec.values.size());

  parallel_for(spec.values.size(), [&](std::size_t i) {
    const CrpInstance inst = with_parameter(spec.base, spec.parameter, spec.values[i]);
    const SolveReport r = sweep(inst, grid, cfg);
    result.records[i] = SweepRecord{spec.values[i], r.objective, r.iterations, r.converged};
  });

  if (result.records.size() < 2) {
    result.verdict.trivial = true;
    result.verdict.pass = true;
    result.verdict.detail = "trivial";
    return result;
  }
  std::vector<double> objectives;
  objectives.reserve(result.records.size());
  for (const auto& r : result.records) objectives.push_back(r.objective);
  result.verdict = check_trend(spec.values, objectives, spec.trend);
  return result;
}

DpComparison compare_fbs_dp(const CrpInstance& inst, GridConfig grid, const FbsConfig& fbs_cfg,
                            const DpConfig& dp_cfg) {
  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };

  DpComparison out;
  const auto t0 = clock::now();
  const SolveReport fbs = sweep(inst, grid, fbs_cfg);
  const auto t1 = clock::now();
  const DpTables tables = dp_solve(inst, dp_cfg);
  const DpRollout rollout = dp_rollout(inst, dp_cfg, tables);
  const auto t2 = clock::now();

  const ControlPolicy dp_policy =
      resample_piecewise_constant(rollout.controls, inst.T, inst.x_max, grid);
  out.fbs_objective = fbs.objective;
  out.dp_objective = evaluate_policy(inst, dp_policy);
  out.ratio = out.dp_objective / out.fbs_objective;
  out.fbs_total_variation = total_variation(fbs.final_policy.values());
  out.dp_total_variation = total_variation(rollout.controls);
  out.fbs_iterations = fbs.iterations;
  out.fbs_converged = fbs.converged;
  out.grid_bound_exceeded = rollout.grid_bound_exceeded;
  out.fbs_seconds = seconds(t1 - t0);
  out.dp_seconds = seconds(t2 - t1);
  out.dp_controls = rollout.controls;
  out.fbs_controls.assign(fbs.final_policy.values().begin(), fbs.final_policy.values().end());
  return out;
}

ReplicationSummary replicate_claims(std::size_t bases, std::size_t policies, std::uint64_t seed,
                                    GridConfig grid, const FbsConfig& cfg) {
  ReplicationSummary summary;
  summary.bases = bases;
  struct Outcome {
    bool converged = false, beat_all = false, shaped = false;
    std::size_t iterations = 0;
  };
  std::vector<Outcome> outcomes(bases);

  for (std::size_t b = 0; b < bases; ++b) {
    UniformStream rng(seed, b);
    const auto jitter = [&] { return rng.next(0.75, 1.25); };
    CrpInstance inst = benchmarks::m1();
    inst.x_max *= jitter();
    inst.mu *= jitter();
    inst.delta1 *= jitter();
    inst.delta2 *= jitter();
    inst.alpha *= jitter();
    inst.omega1 *= jitter();
    inst.omega2 *= jitter();

    const SolveReport fbs = sweep(inst, grid, cfg);
    const RandomComparison cmp =
        compare_against_random(inst, fbs, policies, splitmix64(seed) ^ b);
    const PolicyShape shape = check_policy_shape(fbs.final_policy);
    outcomes[b] = Outcome{fbs.converged, cmp.fraction_beaten == 1.0,
                          shape.starts_at_max && shape.non_increasing, fbs.iterations};
  }
  for (const Outcome& o : outcomes) {
    summary.converged += o.converged;
    summary.beat_all_random += o.beat_all;
    summary.decreasing_from_max += o.shaped;
    summary.max_iterations = std::max(summary.max_iterations, o.iterations);
  }
  return summary;
}

}  // namespace crp
