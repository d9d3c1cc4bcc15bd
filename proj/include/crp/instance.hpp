#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crp/influence.hpp"

namespace crp {

/// One problem instance: initial community state, horizon, response cap,
/// population rates, influence curves and the cost/benefit weights.
struct CrpInstance {
  double A0 = 0.0;      ///< initial active participants
  double I0 = 0.0;      ///< initial inactive participants
  double T = 1.0;       ///< co-creation period
  double x_max = 1.0;   ///< maximal response rate
  double mu = 1.0;      ///< inflow rate (persons / time)
  double delta1 = 1.0;  ///< outflow probability of active participants
  double delta2 = 1.0;  ///< outflow probability of inactive participants
  double alpha = 1.0;   ///< inaction rate (active -> inactive)
  InfluenceFunction beta1 = InfluenceFunction::scaled_arctan(1.0, 1.0);  ///< response-driven activation
  InfluenceFunction beta2 = InfluenceFunction::scaled_arctan(1.0, 1.0);  ///< peer-driven activation
  double omega1 = 1.0;  ///< standard cost per unit response rate per time
  double omega2 = 1.0;  ///< standard benefit per active participant per time

  /// Throws std::invalid_argument naming the first field that violates its
  /// bound. Returns soft warnings (currently only delta2 <= delta1).
  std::vector<std::string> validate() const;

  friend bool operator==(const CrpInstance&, const CrpInstance&) = default;
};

/// Scalar fields that sensitivity sweeps may vary.
enum class Parameter { T, x_max, mu, delta1, delta2, alpha, omega1, omega2 };

std::string_view parameter_name(Parameter p);
/// Accepts the instance-file key names ("T", "x_max", "mu", ...).
Parameter parse_parameter(std::string_view name);

double get_parameter(const CrpInstance& inst, Parameter p);
CrpInstance with_parameter(CrpInstance inst, Parameter p, double value);

}  // namespace crp
