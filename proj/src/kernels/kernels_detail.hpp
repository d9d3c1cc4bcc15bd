#pragma once

#include <span>

#include "crp/kernels/kernels.hpp"

namespace crp::kernels::detail {

double trapezoid_scalar(std::span<const double> y, double h);
double sup_norm_diff_scalar(std::span<const double> a, std::span<const double> b);
void blend_scalar(std::span<double> out, std::span<const double> prev, double r);
void control_update_scalar(const ControlBounds& bounds, std::span<const double> lambda1,
                           std::span<const double> lambda2, std::span<const double> inactive,
                           std::span<double> out);

#if defined(CRP_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif

}  // namespace crp::kernels::detail
