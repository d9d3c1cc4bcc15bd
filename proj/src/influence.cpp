#include "crp/influence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace crp {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("influence parameter ") + what +
                                " must be positive and finite");
  }
}

std::string format_exact(double v) {
  // Shortest form that parses back to the same double.
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

InfluenceFunction::InfluenceFunction(InfluenceFamily family, double a, double b)
    : family_(family), a_(a), b_(b) {}

InfluenceFunction InfluenceFunction::scaled_arctan(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return {InfluenceFamily::ScaledArctan, a, b};
}

InfluenceFunction InfluenceFunction::scaled_log(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return {InfluenceFamily::ScaledLog, a, b};
}

InfluenceFunction InfluenceFunction::power_law(double a, double p) {
  require_positive(a, "a");
  require_positive(p, "p");
  if (!(p < 1.0)) {
    throw std::invalid_argument("power-law exponent must lie in (0, 1)");
  }
  return {InfluenceFamily::PowerLaw, a, p};
}

double InfluenceFunction::value(double z) const {
  if (!(z >= 0.0)) {
    throw std::invalid_argument("influence argument must be nonnegative");
  }
  return value_unchecked(z);
}

double InfluenceFunction::derivative(double z) const {
  if (!(z >= 0.0)) {
    throw std::invalid_argument("influence argument must be nonnegative");
  }
  return derivative_unchecked(z);
}

double InfluenceFunction::inverse_derivative(double y) const {
  if (!(y > 0.0) || y > derivative_at_zero()) {
    throw std::invalid_argument("value outside the influence derivative's range");
  }
  return inverse_derivative_unchecked(y);
}

double InfluenceFunction::derivative_at_zero() const noexcept {
  switch (family_) {
    case InfluenceFamily::ScaledArctan:
    case InfluenceFamily::ScaledLog:
      return a_ * b_;
    case InfluenceFamily::PowerLaw:
      break;
  }
  return std::numeric_limits<double>::infinity();
}

double InfluenceFunction::value_unchecked(double z) const noexcept {
  switch (family_) {
    case InfluenceFamily::ScaledArctan:
      return a_ * std::atan(b_ * z);
    case InfluenceFamily::ScaledLog:
      return a_ * std::log1p(b_ * z);
    case InfluenceFamily::PowerLaw:
      break;
  }
  return a_ * std::pow(z, b_);
}

double InfluenceFunction::derivative_unchecked(double z) const noexcept {
  switch (family_) {
    case InfluenceFamily::ScaledArctan: {
      const double bz = b_ * z;
      return a_ * b_ / (1.0 + bz * bz);
    }
    case InfluenceFamily::ScaledLog:
      return a_ * b_ / (b_ * z + 1.0);
    case InfluenceFamily::PowerLaw:
      break;
  }
  if (z == 0.0) return std::numeric_limits<double>::infinity();
  return a_ * b_ * std::pow(z, b_ - 1.0);
}

double InfluenceFunction::inverse_derivative_unchecked(double y) const noexcept {
  switch (family_) {
    case InfluenceFamily::ScaledArctan:
      return std::sqrt(std::max(0.0, a_ * b_ / y - 1.0)) / b_;
    case InfluenceFamily::ScaledLog:
      return std::max(0.0, a_ * b_ / y - 1.0) / b_;
    case InfluenceFamily::PowerLaw:
      break;
  }
  return std::pow(y / (a_ * b_), 1.0 / (b_ - 1.0));
}

std::string InfluenceFunction::to_string() const {
  const char* name = "power";
  switch (family_) {
    case InfluenceFamily::ScaledArctan: name = "arctan"; break;
    case InfluenceFamily::ScaledLog: name = "log"; break;
    case InfluenceFamily::PowerLaw: break;
  }
  return std::string(name) + "(" + format_exact(a_) + ", " + format_exact(b_) + ")";
}

}  // namespace crp
