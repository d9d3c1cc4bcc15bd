#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "crp/influence.hpp"
#include "oracles.hpp"

using crp::InfluenceFunction;

namespace {

double fd(const InfluenceFunction& f, double z) {
  return crp::oracle::central_difference([&](double u) { return f.value(u); }, z);
}

double bisect_inverse(const InfluenceFunction& f, double y) {
  return crp::oracle::bisect_decreasing([&](double z) { return f.derivative(z) - y; }, 0.0, 100.0);
}

}  // namespace

TEST_CASE("every family vanishes at zero") {
  CHECK(InfluenceFunction::scaled_arctan(0.05, 0.3).value(0.0) == 0.0);
  CHECK(InfluenceFunction::scaled_log(0.01, 0.01).value(0.0) == 0.0);
  CHECK(InfluenceFunction::power_law(0.02, 0.5).value(0.0) == 0.0);
}

TEST_CASE("arctan value matches a high-precision reference") {
  // 0.05 * atan(3) to 20 digits.
  const double reference = 0.062452288619912721291;
  CHECK(InfluenceFunction::scaled_arctan(0.05, 0.3).value(10.0) ==
        doctest::Approx(reference).epsilon(1e-15));
}

TEST_CASE("derivatives agree with central differences") {
  const auto at = InfluenceFunction::scaled_arctan(0.05, 0.3);
  const auto lg = InfluenceFunction::scaled_log(0.01, 0.01);
  const auto pw = InfluenceFunction::power_law(0.02, 0.5);

  CHECK(at.derivative(0.0) == doctest::Approx(0.015).epsilon(1e-14));
  CHECK(lg.derivative(0.0) == doctest::Approx(1e-4).epsilon(1e-14));
  CHECK(at.derivative(10.0) == doctest::Approx(0.0015).epsilon(1e-14));

  // Central differences straddle zero, so they are taken at interior points.
  for (double z : {1e-3, 0.5, 10.0, 37.0}) {
    CHECK(std::abs(at.derivative(z) - fd(at, z)) < 1e-8);
    CHECK(std::abs(lg.derivative(z) - fd(lg, z)) < 1e-8);
  }
  // z^p curves too sharply near zero for a 1e-6 step.
  for (double z : {0.5, 10.0, 37.0}) CHECK(std::abs(pw.derivative(z) - fd(pw, z)) < 1e-8);
  CHECK(std::isinf(pw.derivative(0.0)));
}

TEST_CASE("inverse derivative agrees with bisection") {
  const auto at = InfluenceFunction::scaled_arctan(0.05, 0.3);
  const auto lg = InfluenceFunction::scaled_log(0.01, 0.01);
  const auto pw = InfluenceFunction::power_law(0.02, 0.5);

  CHECK(at.inverse_derivative(0.005) == doctest::Approx(std::sqrt(2.0) / 0.3).epsilon(1e-12));
  CHECK(std::abs(at.inverse_derivative(0.005) - bisect_inverse(at, 0.005)) < 1e-8);
  CHECK(lg.inverse_derivative(5e-5) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(std::abs(lg.inverse_derivative(5e-5) - bisect_inverse(lg, 5e-5)) < 1e-8);
  const double y = pw.derivative(3.0);
  CHECK(std::abs(pw.inverse_derivative(y) - bisect_inverse(pw, y)) < 1e-8);
}

TEST_CASE("inverse derivative at the left endpoint is zero") {
  const auto at = InfluenceFunction::scaled_arctan(0.05, 0.3);
  const auto lg = InfluenceFunction::scaled_log(0.01, 0.01);
  CHECK(at.inverse_derivative(at.derivative_at_zero()) == 0.0);
  CHECK(lg.inverse_derivative(lg.derivative_at_zero()) == 0.0);
}

TEST_CASE("out-of-range arguments are rejected") {
  const auto at = InfluenceFunction::scaled_arctan(0.05, 0.3);
  CHECK_THROWS_AS((void)at.value(-1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)at.inverse_derivative(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)at.inverse_derivative(0.02), std::invalid_argument);
  CHECK_THROWS_AS(InfluenceFunction::scaled_arctan(-1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(InfluenceFunction::scaled_log(0.01, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(InfluenceFunction::power_law(0.02, 1.0), std::invalid_argument);
}

TEST_CASE("text form round-trips exactly") {
  const auto f = InfluenceFunction::scaled_arctan(0.05, 0.1 + 0.2);
  CHECK(f.to_string() == "arctan(0.05, 0.30000000000000004)");
  CHECK(InfluenceFunction::scaled_log(0.01, 0.01).to_string() == "log(0.01, 0.01)");
  CHECK(InfluenceFunction::power_law(0.02, 0.5).to_string() == "power(0.02, 0.5)");
}
