#include "crp/fbs.hpp"

#include <algorithm>
#include <stdexcept>

#include "crp/kernels/kernels.hpp"
#include "crp/objective.hpp"
#include "crp/ode.hpp"

namespace crp {

void FbsConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (!(relaxation >= 0.0 && relaxation < 1.0)) {
    throw std::invalid_argument("relaxation must lie in [0, 1)");
  }
}

double pointwise_optimal_control(double coeff, const CrpInstance& inst) {
  return kernels::optimal_control(coeff,
                                  kernels::ControlBounds::make(inst.beta1, inst.x_max, inst.omega1));
}

namespace {

std::vector<double> updated_controls(const CrpInstance& inst, const ControlPolicy& x) {
  const StateTrajectory state = integrate_state_forward(inst, x);
  const AdjointTrajectory adjoint = integrate_adjoint_backward(inst, x, state);
  std::vector<double> next(x.grid().points());
  kernels::active().control_update(
      kernels::ControlBounds::make(inst.beta1, inst.x_max, inst.omega1), adjoint.lambda1,
      adjoint.lambda2, state.inactive, next);
  return next;
}

}  // namespace

ControlPolicy sweep_once(const CrpInstance& inst, const ControlPolicy& x) {
  return {x.grid(), updated_controls(inst, x), inst.x_max};
}

double evaluate_policy(const CrpInstance& inst, const ControlPolicy& x) {
  return cost_benefit(integrate_state_forward(inst, x), x, inst);
}

SolveReport sweep(const CrpInstance& inst, GridConfig grid_cfg, const FbsConfig& cfg) {
  inst.validate();
  cfg.validate();
  const TimeGrid grid(inst.T, grid_cfg);
  const auto& k = kernels::active();

  std::vector<ControlPolicy> iterates;
  std::vector<double> history;
  ControlPolicy current = ControlPolicy::constant(grid, 0.0, inst.x_max);
  bool converged = false;

  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    std::vector<double> next = updated_controls(inst, current);
    if (cfg.relaxation > 0.0) {
      k.blend(next, current.values(), cfg.relaxation);
      // A convex blend of feasible values can round one ulp past x_max.
      for (double& v : next) v = std::min(std::max(v, 0.0), inst.x_max);
    }
    const double change = k.sup_norm_diff(next, current.values());
    history.push_back(change);
    current = ControlPolicy(grid, std::move(next), inst.x_max);
    iterates.push_back(current);
    if (change < cfg.epsilon) {
      converged = true;
      break;
    }
  }

  StateTrajectory state = integrate_state_forward(inst, current);
  AdjointTrajectory adjoint = integrate_adjoint_backward(inst, current, state);
  const double objective = cost_benefit(state, current, inst);
  const std::size_t iterations = history.size();
  return SolveReport{std::move(iterates), std::move(current),  std::move(state),
                     std::move(adjoint),  objective,           iterations,
                     converged,           std::move(history)};
}

}  // namespace crp
