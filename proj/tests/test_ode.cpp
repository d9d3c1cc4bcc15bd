#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "crp/benchmarks.hpp"
#include "crp/ode.hpp"
#include "oracles.hpp"

using namespace crp;

namespace {

double max_relative(const std::vector<double>& got, const std::vector<double>& want) {
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    scale = std::max(scale, std::abs(want[i]));
    diff = std::max(diff, std::abs(got[i] - want[i]));
  }
  return diff / scale;
}

double beta_slope(const InfluenceFunction& f, double z) {
  return oracle::central_difference([&](double u) { return oracle::beta(f, u); }, z, 1e-4);
}

// Backward Euler-in-reverse for the adjoint, with the state taken from the
// fine Euler oracle. Returns lambda at the coarse grid points.
std::pair<std::vector<double>, std::vector<double>> euler_adjoint(const CrpInstance& inst,
                                                                  std::size_t n,
                                                                  std::size_t substeps) {
  const double h = inst.T / static_cast<double>(n * substeps);
  std::vector<double> A{inst.A0}, I{inst.I0};
  A.reserve(n * substeps + 1);
  I.reserve(n * substeps + 1);
  double a = inst.A0, in = inst.I0;
  for (std::size_t s = 0; s < n * substeps; ++s) {
    const double act = oracle::beta(inst.beta2, a);
    const double da = act * in - (inst.alpha + inst.delta1) * a;
    const double di = inst.mu - act * in + inst.alpha * a - inst.delta2 * in;
    a += h * da;
    in += h * di;
    A.push_back(a);
    I.push_back(in);
  }
  std::vector<double> l1(n + 1, 0.0), l2(n + 1, 0.0);
  double y1 = 0.0, y2 = 0.0;
  for (std::size_t s = n * substeps; s > 0; --s) {
    const double act = oracle::beta(inst.beta2, A[s]);
    const double g = beta_slope(inst.beta2, A[s]) * I[s];
    const double d1 = -inst.omega2 + (inst.alpha + inst.delta1 - g) * y1 - (inst.alpha - g) * y2;
    const double d2 = -act * y1 + (inst.delta2 + act) * y2;
    y1 -= h * d1;
    y2 -= h * d2;
    if ((s - 1) % substeps == 0) {
      l1[(s - 1) / substeps] = y1;
      l2[(s - 1) / substeps] = y2;
    }
  }
  return {l1, l2};
}

Vec2 terminal(const CrpInstance& inst, std::size_t n, double x) {
  const StateTrajectory s =
      integrate_state_forward(inst, ControlPolicy::constant(TimeGrid(inst.T, n), x, inst.x_max));
  return {s.active.back(), s.inactive.back()};
}

}  // namespace

TEST_CASE("inactive-only equilibrium is preserved") {
  CrpInstance inst = benchmarks::m1();
  inst.A0 = 0.0;
  inst.I0 = inst.mu / inst.delta2;
  const auto s = integrate_state_forward(inst, ControlPolicy::constant(TimeGrid(inst.T, 500), 0.0, inst.x_max));
  for (std::size_t i = 0; i < s.active.size(); ++i) {
    CHECK(s.active[i] == 0.0);
    CHECK(s.inactive[i] == doctest::Approx(inst.mu / inst.delta2).epsilon(1e-12));
  }
}

TEST_CASE("state matches a fine-step Euler oracle") {
  const CrpInstance inst = benchmarks::m1();
  const TimeGrid grid(inst.T, 5000);
  const auto rk = integrate_state_forward(inst, ControlPolicy::constant(grid, 0.0, inst.x_max));
  const auto ref = oracle::euler_state(inst, std::vector<double>(grid.points(), 0.0), 1000);
  for (std::size_t i = 0; i < grid.points(); ++i) {
    CHECK(std::abs(rk.active[i] - ref.A[i]) <= 1e-5 * ref.A[i]);
    CHECK(std::abs(rk.inactive[i] - ref.I[i]) <= 1e-5 * ref.I[i]);
  }
}

TEST_CASE("more response never lowers the active population") {
  const CrpInstance inst = benchmarks::m1();
  const TimeGrid grid(inst.T, 5000);
  const auto low = integrate_state_forward(inst, ControlPolicy::constant(grid, 0.0, inst.x_max));
  const auto high = integrate_state_forward(inst, ControlPolicy::constant(grid, inst.x_max, inst.x_max));
  for (std::size_t i = 0; i < grid.points(); ++i) CHECK(high.active[i] >= low.active[i]);
}

TEST_CASE("adjoint terminal condition and zero benefit") {
  CrpInstance inst = benchmarks::m1();
  const ControlPolicy x = ControlPolicy::constant(TimeGrid(inst.T, 1000), 3.0, inst.x_max);
  const auto s = integrate_state_forward(inst, x);
  const auto adj = integrate_adjoint_backward(inst, x, s);
  CHECK(adj.lambda1.back() == 0.0);
  CHECK(adj.lambda2.back() == 0.0);
  CHECK(adj.lambda1.front() > 0.0);

  inst.omega2 = 0.0;
  const auto zero = integrate_adjoint_backward(inst, x, integrate_state_forward(inst, x));
  for (std::size_t i = 0; i < zero.lambda1.size(); ++i) {
    CHECK(zero.lambda1[i] == 0.0);
    CHECK(zero.lambda2[i] == 0.0);
  }
}

TEST_CASE("adjoint matches a fine-step Euler oracle") {
  const CrpInstance inst = benchmarks::m1();
  const std::size_t n = 5000;
  const ControlPolicy x = ControlPolicy::constant(TimeGrid(inst.T, n), 0.0, inst.x_max);
  const auto adj = integrate_adjoint_backward(inst, x, integrate_state_forward(inst, x));
  const auto [l1, l2] = euler_adjoint(inst, n, 1000);
  CHECK(max_relative(adj.lambda1, l1) < 1e-5);
  CHECK(max_relative(adj.lambda2, l2) < 1e-5);
}

TEST_CASE("RK4 terminal error shrinks sixteenfold per halving") {
  const CrpInstance inst = benchmarks::m1();
  const Vec2 y1 = terminal(inst, 500, 5.0), y2 = terminal(inst, 1000, 5.0), y3 = terminal(inst, 2000, 5.0);
  const double e1 = std::hypot(y1[0] - y2[0], y1[1] - y2[1]);
  const double e2 = std::hypot(y2[0] - y3[0], y2[1] - y3[1]);
  const double ratio = e1 / e2;
  CHECK(ratio >= 12.8);
  CHECK(ratio <= 19.2);
}

TEST_CASE("population balance holds along the trajectory") {
  for (const CrpInstance& inst : {benchmarks::m1(), benchmarks::m2(), benchmarks::m3()}) {
    const TimeGrid grid(inst.T, 5000);
    const auto s = integrate_state_forward(inst, ControlPolicy::constant(grid, 0.5 * inst.x_max, inst.x_max));
    double flow = 0.0;
    for (std::size_t i = 0; i + 1 < grid.points(); ++i) {
      const double f0 = inst.mu - inst.delta1 * s.active[i] - inst.delta2 * s.inactive[i];
      const double f1 = inst.mu - inst.delta1 * s.active[i + 1] - inst.delta2 * s.inactive[i + 1];
      flow += 0.5 * grid.step() * (f0 + f1);
    }
    const double change = s.active.back() + s.inactive.back() - inst.A0 - inst.I0;
    CHECK(std::abs(change - flow) <= 1e-6 * std::abs(change));
  }
}

TEST_CASE("non-finite states are reported") {
  CrpInstance inst = benchmarks::m1();
  inst.beta2 = InfluenceFunction::power_law(1e6, 0.99);
  inst.alpha = 0.0;
  inst.I0 = 1e300;
  const ControlPolicy x = ControlPolicy::constant(TimeGrid(inst.T, 10), 0.0, inst.x_max);
  CHECK_THROWS_AS(integrate_state_forward(inst, x), NumericalError);
}
