#include "crp/instance.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace crp {

namespace {

void require(bool ok, const char* field, const char* bound) {
  if (!ok) {
    throw std::invalid_argument(std::string(field) + " must be " + bound);
  }
}

constexpr std::array<std::pair<Parameter, std::string_view>, 8> kNames{{
    {Parameter::T, "T"},
    {Parameter::x_max, "x_max"},
    {Parameter::mu, "mu"},
    {Parameter::delta1, "delta1"},
    {Parameter::delta2, "delta2"},
    {Parameter::alpha, "alpha"},
    {Parameter::omega1, "omega1"},
    {Parameter::omega2, "omega2"},
}};

}  // namespace

std::vector<std::string> CrpInstance::validate() const {
  const auto finite = [](double v) { return std::isfinite(v); };
  require(finite(A0) && A0 >= 0.0, "A0", "finite and >= 0");
  require(finite(I0) && I0 >= 0.0, "I0", "finite and >= 0");
  require(finite(T) && T > 0.0, "T", "finite and > 0");
  require(finite(x_max) && x_max > 0.0, "x_max", "finite and > 0");
  require(finite(mu) && mu > 0.0, "mu", "finite and > 0");
  require(finite(delta1) && delta1 > 0.0, "delta1", "finite and > 0");
  require(finite(delta2) && delta2 > 0.0, "delta2", "finite and > 0");
  require(finite(alpha) && alpha > 0.0, "alpha", "finite and > 0");
  require(finite(omega1) && omega1 > 0.0, "omega1", "finite and > 0");
  // omega2 = 0 is the degenerate no-benefit instance (optimal policy is 0).
  require(finite(omega2) && omega2 >= 0.0, "omega2", "finite and >= 0");

  std::vector<std::string> warnings;
  if (!(delta2 > delta1)) {
    warnings.emplace_back(
        "delta2 <= delta1: inactive participants are expected to leave faster than active ones");
  }
  return warnings;
}

std::string_view parameter_name(Parameter p) {
  for (const auto& [param, name] : kNames) {
    if (param == p) return name;
  }
  return "?";
}

Parameter parse_parameter(std::string_view name) {
  for (const auto& [param, n] : kNames) {
    if (n == name) return param;
  }
  throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

double get_parameter(const CrpInstance& inst, Parameter p) {
  switch (p) {
    case Parameter::T: return inst.T;
    case Parameter::x_max: return inst.x_max;
    case Parameter::mu: return inst.mu;
    case Parameter::delta1: return inst.delta1;
    case Parameter::delta2: return inst.delta2;
    case Parameter::alpha: return inst.alpha;
    case Parameter::omega1: return inst.omega1;
    case Parameter::omega2: return inst.omega2;
  }
  return 0.0;
}

CrpInstance with_parameter(CrpInstance inst, Parameter p, double value) {
  switch (p) {
    case Parameter::T: inst.T = value; break;
    case Parameter::x_max: inst.x_max = value; break;
    case Parameter::mu: inst.mu = value; break;
    case Parameter::delta1: inst.delta1 = value; break;
    case Parameter::delta2: inst.delta2 = value; break;
    case Parameter::alpha: inst.alpha = value; break;
    case Parameter::omega1: inst.omega1 = value; break;
    case Parameter::omega2: inst.omega2 = value; break;
  }
  return inst;
}

}  // namespace crp
