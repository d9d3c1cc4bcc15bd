#pragma once

#include <string>

namespace crp {

/// Shape of a saturating influence curve.
enum class InfluenceFamily {
  ScaledArctan,  ///< z -> a * atan(b * z)
  ScaledLog,     ///< z -> a * ln(b * z + 1)
  PowerLaw,      ///< z -> a * z^p, 0 < p < 1
};

/**
 * Monotone, concave rate function mapping a nonnegative input (a response
 * rate or an active-participant count) to a per-capita activation
 * probability per unit time.
 *
 * Every family vanishes at zero and has a closed-form derivative and
 * inverse derivative, which the pointwise Hamiltonian maximizer relies on.
 * Instances are immutable.
 */
class InfluenceFunction {
 public:
  static InfluenceFunction scaled_arctan(double a, double b);
  static InfluenceFunction scaled_log(double a, double b);
  static InfluenceFunction power_law(double a, double p);

  InfluenceFamily family() const noexcept { return family_; }
  double scale() const noexcept { return a_; }
  /// b for the arctan/log families, the exponent p for PowerLaw.
  double shape() const noexcept { return b_; }

  /// f(z). Throws std::invalid_argument for negative z.
  double value(double z) const;

  /// f'(z). PowerLaw at z = 0 returns +infinity.
  double derivative(double z) const;

  /// z >= 0 with f'(z) = y. Throws std::invalid_argument when y is not in
  /// the derivative's range on [0, inf): (0, f'(0)] for arctan/log,
  /// (0, inf) for PowerLaw.
  double inverse_derivative(double y) const;

  /// Supremum of f' on [0, inf); +infinity for PowerLaw.
  double derivative_at_zero() const noexcept;

  // Unchecked evaluations for inner loops; callers guarantee the domain.
  double value_unchecked(double z) const noexcept;
  double derivative_unchecked(double z) const noexcept;
  double inverse_derivative_unchecked(double y) const noexcept;

  /// Text form used by instance files, e.g. "arctan(0.05, 0.3)". Doubles are
  /// printed with enough digits to round-trip exactly.
  std::string to_string() const;

  friend bool operator==(const InfluenceFunction&, const InfluenceFunction&) = default;

 private:
  InfluenceFunction(InfluenceFamily family, double a, double b);

  InfluenceFamily family_;
  double a_;
  double b_;
};

}  // namespace crp
