#pragma once

#include <span>

#include "crp/influence.hpp"

// Data-parallel inner loops shared by the solvers. Each kernel has a scalar
// reference implementation and, where the target supports it, an AVX2
// variant selected at runtime. The AVX2 control update and blend reproduce
// the scalar results bit-for-bit; reductions (trapezoid) differ only in
// summation order.

namespace crp::kernels {

enum class Isa { Scalar, Avx2 };

/// Inputs of the pointwise Hamiltonian maximizer over [0, x_max] for
/// G(u) = coeff * beta1(u) - omega1 * u.
struct ControlBounds {
  InfluenceFamily family;
  double a;             // beta1 scale
  double b;             // beta1 shape (b or exponent p)
  double ab;            // a * b, i.e. beta1'(0) for arctan/log
  double x_max;
  double omega1;
  double slope_at_max;  // beta1'(x_max)
  double slope_at_zero; // beta1'(0), +inf for power law

  static ControlBounds make(const InfluenceFunction& beta1, double x_max, double omega1);
};

/// Scalar maximizer for one switching coefficient (lambda1 - lambda2) * I.
double optimal_control(double coeff, const ControlBounds& bounds) noexcept;

struct KernelTable {
  Isa isa;
  const char* name;
  /// Composite trapezoid of uniformly spaced samples.
  double (*trapezoid)(std::span<const double> y, double h);
  /// max_i |a_i - b_i|.
  double (*sup_norm_diff)(std::span<const double> a, std::span<const double> b);
  /// out_i <- (1 - r) * out_i + r * prev_i.
  void (*blend)(std::span<double> out, std::span<const double> prev, double r);
  /// out_i <- optimal_control((lambda1_i - lambda2_i) * inactive_i, bounds).
  void (*control_update)(const ControlBounds& bounds, std::span<const double> lambda1,
                         std::span<const double> lambda2, std::span<const double> inactive,
                         std::span<double> out);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the build or the running CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

/// Best available table. Setting CRP_SIMD=scalar in the environment forces
/// the scalar reference kernels.
const KernelTable& active() noexcept;

}  // namespace crp::kernels
