#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crp/instance.hpp"
#include "crp/ode.hpp"
#include "crp/trajectory.hpp"

namespace crp {

/// How a DP transition is scored.
enum class StageRewardMode {
  /// (omega2 * A' - omega1 * x - lambda * x^2) * (T / N): the running
  /// objective with a smoothness penalty, integrated over one step.
  Corrected,
  /// omega2 * I' - omega1 * x + lambda * x^2: rewards inactive members and
  /// the penalty term, unscaled by the step. Kept for comparison runs only.
  Literal,
};

struct DpConfig {
  std::size_t N = 50;   ///< time steps
  std::size_t M = 400;  ///< state-grid cells per axis (grid points 0..M)
  std::size_t P = 50;   ///< control levels (0..P)
  double S = 0.0;       ///< state-grid bound; <= 0 selects the default in bound()
  double lambda_reg = 0.1;
  StageRewardMode mode = StageRewardMode::Corrected;

  void validate() const;
  /// S if set, else 1.2 times the largest A + I reachable within the horizon:
  /// min(max(A0 + I0, mu / min(delta1, delta2)), A0 + I0 + mu * T).
  double bound(const CrpInstance& inst) const;
};

/// Optimal control index and value-to-go on the (time, A, I) lattice.
class DpTables {
 public:
  DpTables(std::size_t N, std::size_t M, std::size_t P, double S, double x_max);

  std::size_t N() const noexcept { return N_; }
  std::size_t M() const noexcept { return M_; }
  std::size_t P() const noexcept { return P_; }
  double S() const noexcept { return S_; }
  double cell_width() const noexcept { return S_ / static_cast<double>(M_); }
  double level(std::size_t p) const noexcept {
    return p == P_ ? x_max_ : static_cast<double>(p) * x_max_ / static_cast<double>(P_);
  }

  std::size_t control_index(std::size_t i, std::size_t j, std::size_t k) const {
    return control_[offset(i, j, k)];
  }
  double control(std::size_t i, std::size_t j, std::size_t k) const {
    return level(control_index(i, j, k));
  }
  double value(std::size_t i, std::size_t j, std::size_t k) const { return value_[offset(i, j, k)]; }

  /// Transitions scored from a lattice cell that left [0, S] and were
  /// clamped. Cells near the far corner of the lattice always contribute;
  /// reachability is judged by the rollout.
  std::size_t clamped_transitions() const noexcept { return clamped_transitions_; }

 private:
  friend DpTables dp_solve(const CrpInstance&, const DpConfig&);

  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * (M_ + 1) + j) * (M_ + 1) + k;
  }

  std::size_t N_, M_, P_;
  double S_, x_max_;
  std::vector<std::uint16_t> control_;
  std::vector<double> value_;
  std::size_t clamped_transitions_ = 0;
};

/// Nearest lattice index of v on {0, S/M, ..., S}; exact midpoints go to the
/// lower index. Values outside [0, S] clamp and set `clamped`.
std::size_t snap_to_grid(double v, double S, std::size_t M, bool& clamped) noexcept;

/// Reward of one transition landing in `next` under control level `x`.
double dp_stage_reward(const CrpInstance& inst, const DpConfig& cfg, Vec2 next, double x);

/// Backward recursion over the lattice. Each cell tries every control level,
/// advances one RK4 step of the state system, snaps the successor to the
/// nearest cell and keeps the best stage reward plus value-to-go (first
/// level wins ties).
DpTables dp_solve(const CrpInstance& inst, const DpConfig& cfg);

struct DpRollout {
  std::vector<double> controls;  ///< one control per time step (N values)
  std::vector<Vec2> states;      ///< exact (A, I) at t_0 .. t_N
  bool grid_bound_exceeded = false;  ///< a visited state left [0, S]
};

/// Follows the tables from (A0, I0): looks up the control at the nearest
/// cell, then advances the exact (unsnapped) state by one RK4 step.
DpRollout dp_rollout(const CrpInstance& inst, const DpConfig& cfg, const DpTables& tables);

/// The rollout as an (N+1)-point policy on the DP time grid; the last
/// value repeats. Requires N >= 2.
ControlPolicy dp_rollout_policy(const CrpInstance& inst, const DpRollout& rollout);

/// Piecewise-constant resampling of per-step controls onto a finer grid so
/// the DP policy can be scored on the same grid as the sweep.
ControlPolicy resample_piecewise_constant(std::span<const double> controls, double T, double x_max,
                                          GridConfig grid);

}  // namespace crp
