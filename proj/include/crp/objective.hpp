#pragma once

#include "crp/instance.hpp"
#include "crp/trajectory.hpp"

namespace crp {

/// omega1 * integral of x over [0, T] (composite trapezoid on the policy grid).
double policy_cost(const ControlPolicy& x, double omega1);

/// omega2 * integral of A over [0, T] (same quadrature).
double benefit(const StateTrajectory& traj, double omega2);

/// J = omega2 * int A dt - omega1 * int x dt. Throws std::invalid_argument
/// when the trajectory and policy grids differ.
double cost_benefit(const StateTrajectory& traj, const ControlPolicy& x, const CrpInstance& inst);

/// Pointwise Hamiltonian of the control problem at (A, I, x, lambda1, lambda2).
double hamiltonian(double A, double I, double x, double lambda1, double lambda2,
                   const CrpInstance& inst);

}  // namespace crp
