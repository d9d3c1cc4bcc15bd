#include "crp/objective.hpp"

#include <stdexcept>

#include "crp/kernels/kernels.hpp"

namespace crp {

double policy_cost(const ControlPolicy& x, double omega1) {
  return omega1 * kernels::active().trapezoid(x.values(), x.grid().step());
}

double benefit(const StateTrajectory& traj, double omega2) {
  return omega2 * kernels::active().trapezoid(traj.active, traj.grid.step());
}

double cost_benefit(const StateTrajectory& traj, const ControlPolicy& x, const CrpInstance& inst) {
  if (!(traj.grid == x.grid()) || traj.active.size() != x.grid().points()) {
    throw std::invalid_argument("state trajectory and policy are sampled on different grids");
  }
  return benefit(traj, inst.omega2) - policy_cost(x, inst.omega1);
}

double hamiltonian(double A, double I, double x, double lambda1, double lambda2,
                   const CrpInstance& inst) {
  const double activation = (inst.beta1.value(x) + inst.beta2.value(A)) * I;
  const double dA = activation - inst.alpha * A - inst.delta1 * A;
  const double dI = inst.mu - activation + inst.alpha * A - inst.delta2 * I;
  return inst.omega2 * A - inst.omega1 * x + lambda1 * dA + lambda2 * dI;
}

}  // namespace crp
