#include "crp/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace crp {

namespace {

// Classical RK4 on a 2-vector. `rhs(s, y)` is evaluated at the stage
// fraction s in {0, 1/2, 1} of the step.
template <class Rhs>
Vec2 rk4_step(const Rhs& rhs, const Vec2& y, double h) {
  const auto axpy = [](const Vec2& base, double w, const Vec2& k) {
    return Vec2{base[0] + w * k[0], base[1] + w * k[1]};
  };
  const Vec2 k1 = rhs(0, y);
  const Vec2 k2 = rhs(1, axpy(y, 0.5 * h, k1));
  const Vec2 k3 = rhs(1, axpy(y, 0.5 * h, k2));
  const Vec2 k4 = rhs(2, axpy(y, h, k3));
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

void require_finite(const Vec2& y, double t, const char* what) {
  if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
    throw NumericalError(std::string(what) + " became non-finite near t = " + std::to_string(t) +
                         "; check parameter magnitudes or refine the grid");
  }
}

void require_same_horizon(const CrpInstance& inst, const ControlPolicy& x) {
  if (x.grid().horizon() != inst.T) {
    throw std::invalid_argument("policy grid horizon differs from the instance period T");
  }
}

// Influence arguments may dip a rounding error below zero inside RK stages.
double beta2_at(const CrpInstance& inst, double active) {
  return inst.beta2.value_unchecked(std::max(active, 0.0));
}

}  // namespace

Vec2 state_rhs(const CrpInstance& inst, double active, double inactive, double beta1_value) {
  const double flow = (beta1_value + beta2_at(inst, active)) * inactive;
  return {flow - inst.alpha * active - inst.delta1 * active,
          inst.mu - flow + inst.alpha * active - inst.delta2 * inactive};
}

Vec2 state_step(const CrpInstance& inst, Vec2 state, double beta1_value, double h) {
  return rk4_step([&](int, const Vec2& y) { return state_rhs(inst, y[0], y[1], beta1_value); },
                  state, h);
}

StateTrajectory integrate_state_forward(const CrpInstance& inst, const ControlPolicy& x) {
  require_same_horizon(inst, x);
  const TimeGrid& grid = x.grid();
  const std::size_t n = grid.intervals();
  const double h = grid.step();

  StateTrajectory out{grid, std::vector<double>(n + 1), std::vector<double>(n + 1)};
  Vec2 y{inst.A0, inst.I0};
  out.active[0] = y[0];
  out.inactive[0] = y[1];

  for (std::size_t i = 0; i < n; ++i) {
    const double b1[3] = {inst.beta1.value_unchecked(x[i]),
                          inst.beta1.value_unchecked(0.5 * (x[i] + x[i + 1])),
                          inst.beta1.value_unchecked(x[i + 1])};
    y = rk4_step([&](int s, const Vec2& v) { return state_rhs(inst, v[0], v[1], b1[s]); }, y, h);
    require_finite(y, grid.time(i + 1), "state");
    out.active[i + 1] = y[0];
    out.inactive[i + 1] = y[1];
  }
  return out;
}

AdjointTrajectory integrate_adjoint_backward(const CrpInstance& inst, const ControlPolicy& x,
                                             const StateTrajectory& state) {
  require_same_horizon(inst, x);
  const TimeGrid& grid = x.grid();
  if (!(state.grid == grid) || state.active.size() != grid.points()) {
    throw std::invalid_argument("state trajectory and policy are sampled on different grids");
  }
  const std::size_t n = grid.intervals();
  const double h = grid.step();
  const auto& A = state.active;
  const auto& I = state.inactive;

  AdjointTrajectory out{grid, std::vector<double>(n + 1, 0.0), std::vector<double>(n + 1, 0.0)};
  Vec2 y{0.0, 0.0};

  struct Coefficients {
    double peer_gain;   // beta2'(A) * I
    double activation;  // beta1(x) + beta2(A)
  };
  const auto coefficients = [&](double a, double in, double u) {
    const double a_pos = std::max(a, 0.0);
    return Coefficients{inst.beta2.derivative_unchecked(a_pos) * in,
                        inst.beta1.value_unchecked(u) + inst.beta2.value_unchecked(a_pos)};
  };

  // Step from t_i back to t_{i-1}; stage s = 0, 1, 2 sits at t_i, the
  // midpoint, and t_{i-1}. The reversed system is the negated adjoint field.
  for (std::size_t i = n; i > 0; --i) {
    const Coefficients c[3] = {
        coefficients(A[i], I[i], x[i]),
        coefficients(0.5 * (A[i] + A[i - 1]), 0.5 * (I[i] + I[i - 1]), 0.5 * (x[i] + x[i - 1])),
        coefficients(A[i - 1], I[i - 1], x[i - 1])};
    const auto reversed = [&](int s, const Vec2& l) {
      const Coefficients& k = c[s];
      const double d1 = -inst.omega2 + (inst.alpha + inst.delta1 - k.peer_gain) * l[0] -
                        (inst.alpha - k.peer_gain) * l[1];
      const double d2 = -k.activation * l[0] + (inst.delta2 + k.activation) * l[1];
      return Vec2{-d1, -d2};
    };
    y = rk4_step(reversed, y, h);
    require_finite(y, grid.time(i - 1), "adjoint");
    out.lambda1[i - 1] = y[0];
    out.lambda2[i - 1] = y[1];
  }
  return out;
}

}  // namespace crp
