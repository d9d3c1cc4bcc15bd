#pragma once

#include <cstddef>
#include <vector>

#include "crp/instance.hpp"
#include "crp/trajectory.hpp"

namespace crp {

struct FbsConfig {
  double epsilon = 1e-6;            ///< sup-norm threshold on successive policies
  std::size_t max_iterations = 100;
  /// x_new = (1 - r) * x_candidate + r * x_previous. 0 is the plain sweep.
  double relaxation = 0.0;

  void validate() const;
};

struct SolveReport {
  std::vector<ControlPolicy> iterates;  ///< x^(1), ..., x^(k)
  ControlPolicy final_policy;
  StateTrajectory state;                ///< state under final_policy
  AdjointTrajectory adjoint;            ///< adjoint under final_policy
  double objective = 0.0;               ///< J(final_policy)
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> sup_norm_history;  ///< ||x^(k) - x^(k-1)||_inf per iteration
};

/// Maximizer of coeff * beta1(u) - omega1 * u over u in [0, x_max], where
/// coeff = (lambda1 - lambda2) * I. Saturates at x_max when the slope at
/// x_max still pays for the cost, shuts off when the slope at 0 does not,
/// and otherwise solves beta1'(u) = omega1 / coeff in closed form.
/// Nonpositive coefficients give 0.
double pointwise_optimal_control(double coeff, const CrpInstance& inst);

/// Forward-backward sweep from x^(0) = 0: state forward, adjoint backward,
/// pointwise control update at every grid point, optional relaxation, until
/// successive policies differ by less than epsilon in sup norm.
/// Hitting max_iterations is reported through `converged`, not thrown.
SolveReport sweep(const CrpInstance& inst, GridConfig grid, const FbsConfig& cfg = {});

/// One sweep (state, adjoint, update) from a given policy, without relaxation.
ControlPolicy sweep_once(const CrpInstance& inst, const ControlPolicy& x);

/// J of an arbitrary feasible policy (forward integration + quadrature).
double evaluate_policy(const CrpInstance& inst, const ControlPolicy& x);

}  // namespace crp
