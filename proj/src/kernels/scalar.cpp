#include <algorithm>
#include <cmath>

#include "crp/kernels/kernels.hpp"
#include "kernels_detail.hpp"

namespace crp::kernels {

ControlBounds ControlBounds::make(const InfluenceFunction& beta1, double x_max, double omega1) {
  return {beta1.family(),
          beta1.scale(),
          beta1.shape(),
          beta1.scale() * beta1.shape(),
          x_max,
          omega1,
          beta1.derivative_unchecked(x_max),
          beta1.derivative_at_zero()};
}

double optimal_control(double coeff, const ControlBounds& c) noexcept {
  // G is non-increasing when coeff <= 0.
  if (!(coeff > 0.0)) return 0.0;
  if (coeff * c.slope_at_max > c.omega1) return c.x_max;
  if (coeff * c.slope_at_zero < c.omega1) return 0.0;

  const double y = c.omega1 / coeff;
  double z = 0.0;
  switch (c.family) {
    case InfluenceFamily::ScaledArctan:
      z = std::sqrt(std::max(c.ab / y - 1.0, 0.0)) / c.b;
      break;
    case InfluenceFamily::ScaledLog:
      z = std::max(c.ab / y - 1.0, 0.0) / c.b;
      break;
    case InfluenceFamily::PowerLaw:
      z = std::pow(y / c.ab, 1.0 / (c.b - 1.0));
      break;
  }
  return std::min(std::max(z, 0.0), c.x_max);
}

namespace detail {

double trapezoid_scalar(std::span<const double> y, double h) {
  if (y.size() < 2) return 0.0;
  double interior = 0.0;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) interior += y[i];
  return h * (0.5 * (y.front() + y.back()) + interior);
}

double sup_norm_diff_scalar(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void blend_scalar(std::span<double> out, std::span<const double> prev, double r) {
  const double keep = 1.0 - r;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = keep * out[i] + r * prev[i];
}

void control_update_scalar(const ControlBounds& bounds, std::span<const double> lambda1,
                           std::span<const double> lambda2, std::span<const double> inactive,
                           std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = optimal_control((lambda1[i] - lambda2[i]) * inactive[i], bounds);
  }
}

}  // namespace detail

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar,
                                 "scalar",
                                 &detail::trapezoid_scalar,
                                 &detail::sup_norm_diff_scalar,
                                 &detail::blend_scalar,
                                 &detail::control_update_scalar};
  return table;
}

}  // namespace crp::kernels
