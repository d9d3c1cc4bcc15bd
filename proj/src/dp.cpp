#include "crp/dp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "crp/parallel.hpp"

namespace crp {

void DpConfig::validate() const {
  if (N < 1 || M < 1 || P < 1) throw std::invalid_argument("DP needs N, M, P >= 1");
  if (P > std::numeric_limits<std::uint16_t>::max()) {
    throw std::invalid_argument("DP control resolution P is limited to 65535");
  }
  if (!(lambda_reg >= 0.0)) throw std::invalid_argument("DP regularization must be >= 0");
  if (!std::isfinite(S)) throw std::invalid_argument("DP state bound must be finite");
}

double DpConfig::bound(const CrpInstance& inst) const {
  if (S > 0.0) return S;
  // A + I grows at most at rate mu, and never beyond the inflow/outflow
  // balance once above it.
  const double start = inst.A0 + inst.I0;
  const double balance = std::max(start, inst.mu / std::min(inst.delta1, inst.delta2));
  return 1.2 * std::min(balance, start + inst.mu * inst.T);
}

DpTables::DpTables(std::size_t N, std::size_t M, std::size_t P, double S, double x_max)
    : N_(N),
      M_(M),
      P_(P),
      S_(S),
      x_max_(x_max),
      control_((N + 1) * (M + 1) * (M + 1), 0),
      value_((N + 1) * (M + 1) * (M + 1), 0.0) {}

std::size_t snap_to_grid(double v, double S, std::size_t M, bool& clamped) noexcept {
  if (!(v > 0.0)) {
    if (v < 0.0) clamped = true;
    return 0;
  }
  if (v >= S) {
    if (v > S) clamped = true;
    return M;
  }
  const double q = v / S * static_cast<double>(M);
  auto j = static_cast<std::size_t>(q);
  if (q - static_cast<double>(j) > 0.5) ++j;
  return std::min(j, M);
}

double dp_stage_reward(const CrpInstance& inst, const DpConfig& cfg, Vec2 next, double x) {
  switch (cfg.mode) {
    case StageRewardMode::Corrected: {
      const double h = inst.T / static_cast<double>(cfg.N);
      return (inst.omega2 * next[0] - inst.omega1 * x - cfg.lambda_reg * x * x) * h;
    }
    case StageRewardMode::Literal:
      break;
  }
  return inst.omega2 * next[1] - inst.omega1 * x + cfg.lambda_reg * x * x;
}

DpTables dp_solve(const CrpInstance& inst, const DpConfig& cfg) {
  inst.validate();
  cfg.validate();
  const double S = cfg.bound(inst);
  const std::size_t N = cfg.N, M = cfg.M, P = cfg.P;
  const double h = inst.T / static_cast<double>(N);

  DpTables tables(N, M, P, S, inst.x_max);
  std::vector<double> levels(P + 1), beta1_levels(P + 1);
  for (std::size_t p = 0; p <= P; ++p) {
    levels[p] = tables.level(p);
    beta1_levels[p] = inst.beta1.value_unchecked(levels[p]);
  }

  std::atomic<std::size_t> clamped_total{0};
  for (std::size_t step = N; step-- > 0;) {
    parallel_for(M + 1, [&](std::size_t j) {
      std::size_t clamped = 0;
      const double a = static_cast<double>(j) * S / static_cast<double>(M);
      for (std::size_t k = 0; k <= M; ++k) {
        const double in = static_cast<double>(k) * S / static_cast<double>(M);
        std::size_t best_p = 0;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t p = 0; p <= P; ++p) {
          const Vec2 next = state_step(inst, {a, in}, beta1_levels[p], h);
          bool outside = false;
          const std::size_t jn = snap_to_grid(next[0], S, M, outside);
          const std::size_t kn = snap_to_grid(next[1], S, M, outside);
          clamped += outside;
          const double total =
              dp_stage_reward(inst, cfg, next, levels[p]) + tables.value(step + 1, jn, kn);
          if (total > best) {
            best = total;
            best_p = p;
          }
        }
        const std::size_t at = tables.offset(step, j, k);
        tables.control_[at] = static_cast<std::uint16_t>(best_p);
        tables.value_[at] = best;
      }
      clamped_total.fetch_add(clamped, std::memory_order_relaxed);
    });
  }
  tables.clamped_transitions_ = clamped_total.load();
  return tables;
}

DpRollout dp_rollout(const CrpInstance& inst, const DpConfig& cfg, const DpTables& tables) {
  if (tables.N() != cfg.N || tables.M() != cfg.M || tables.P() != cfg.P) {
    throw std::invalid_argument("DP tables were built with a different configuration");
  }
  const double h = inst.T / static_cast<double>(cfg.N);
  DpRollout out;
  out.controls.reserve(cfg.N);
  out.states.reserve(cfg.N + 1);
  Vec2 y{inst.A0, inst.I0};
  out.states.push_back(y);
  for (std::size_t i = 0; i < cfg.N; ++i) {
    bool outside = false;
    const std::size_t j = snap_to_grid(y[0], tables.S(), tables.M(), outside);
    const std::size_t k = snap_to_grid(y[1], tables.S(), tables.M(), outside);
    out.grid_bound_exceeded = out.grid_bound_exceeded || outside;
    const double u = tables.control(i, j, k);
    out.controls.push_back(u);
    y = state_step(inst, y, inst.beta1.value_unchecked(u), h);
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
      throw NumericalError("DP rollout state became non-finite");
    }
    out.states.push_back(y);
  }
  const auto& last = out.states.back();
  out.grid_bound_exceeded = out.grid_bound_exceeded || last[0] > tables.S() || last[1] > tables.S();
  return out;
}

ControlPolicy dp_rollout_policy(const CrpInstance& inst, const DpRollout& rollout) {
  std::vector<double> values(rollout.controls);
  values.push_back(rollout.controls.back());
  return {TimeGrid(inst.T, rollout.controls.size()), std::move(values), inst.x_max};
}

ControlPolicy resample_piecewise_constant(std::span<const double> controls, double T, double x_max,
                                          GridConfig grid_cfg) {
  if (controls.empty()) throw std::invalid_argument("no controls to resample");
  const TimeGrid grid(T, grid_cfg);
  std::vector<double> values(grid.points());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t slot = i * controls.size() / grid.intervals();
    values[i] = controls[std::min(slot, controls.size() - 1)];
  }
  return {grid, std::move(values), x_max};
}

}  // namespace crp
