#pragma once

#include <array>
#include <stdexcept>

#include "crp/instance.hpp"
#include "crp/trajectory.hpp"

namespace crp {

/// Raised when an integration produces a non-finite sample. Usually means
/// parameter magnitudes the model cannot carry or a grid that is too coarse.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vec2 = std::array<double, 2>;

/// Right-hand side of the community state system for fixed beta1 activation.
Vec2 state_rhs(const CrpInstance& inst, double active, double inactive, double beta1_value);

/// One classical RK4 step of the state system with the response-driven
/// activation held at `beta1_value` over the whole step.
Vec2 state_step(const CrpInstance& inst, Vec2 state, double beta1_value, double h);

/// RK4 solution of the state system from (A0, I0) on the policy's grid.
/// Control values at stage times come from linear interpolation of x.
StateTrajectory integrate_state_forward(const CrpInstance& inst, const ControlPolicy& x);

/// RK4 solution of the adjoint system from lambda(T) = 0 back to t = 0,
/// integrating the time-reversed system forward. A, I and x are linearly
/// interpolated at stage times.
AdjointTrajectory integrate_adjoint_backward(const CrpInstance& inst, const ControlPolicy& x,
                                             const StateTrajectory& state);

}  // namespace crp
