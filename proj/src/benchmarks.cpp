#include "crp/benchmarks.hpp"

namespace crp::benchmarks {

CrpInstance m1() {
  return CrpInstance{.A0 = 50,
                     .I0 = 10000,
                     .T = 50,
                     .x_max = 10,
                     .mu = 12,
                     .delta1 = 0.0001,
                     .delta2 = 0.001,
                     .alpha = 0.1,
                     .beta1 = InfluenceFunction::scaled_arctan(0.05, 0.3),
                     .beta2 = InfluenceFunction::scaled_log(0.01, 0.01),
                     .omega1 = 1000,
                     .omega2 = 20};
}

CrpInstance m2() {
  return CrpInstance{.A0 = 100,
                     .I0 = 10000,
                     .T = 80,
                     .x_max = 15,
                     .mu = 15,
                     .delta1 = 0.0001,
                     .delta2 = 0.001,
                     .alpha = 0.15,
                     .beta1 = InfluenceFunction::power_law(0.06, 0.25),
                     .beta2 = InfluenceFunction::power_law(0.003, 1.0 / 3.0),
                     .omega1 = 1200,
                     .omega2 = 20};
}

CrpInstance m3() {
  return CrpInstance{.A0 = 150,
                     .I0 = 10000,
                     .T = 100,
                     .x_max = 20,
                     .mu = 10,
                     .delta1 = 0.0003,
                     .delta2 = 0.001,
                     .alpha = 0.2,
                     .beta1 = InfluenceFunction::scaled_log(0.04, 1.0),
                     .beta2 = InfluenceFunction::scaled_arctan(0.04, 0.001),
                     .omega1 = 1000,
                     .omega2 = 25};
}

CrpInstance sensitivity_base() {
  return CrpInstance{.A0 = 100,
                     .I0 = 10000,
                     .T = 100,
                     .x_max = 15,
                     .mu = 12,
                     .delta1 = 0.0001,
                     .delta2 = 0.001,
                     .alpha = 0.1,
                     .beta1 = InfluenceFunction::scaled_arctan(0.05, 0.3),
                     .beta2 = InfluenceFunction::scaled_log(0.01, 0.01),
                     .omega1 = 800,
                     .omega2 = 20};
}

namespace {

// first + step * i for i < count.
std::vector<double> arithmetic(double first, double step, int count) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v.push_back(first + step * i);
  return v;
}

SweepSpec make(Parameter p, std::vector<double> values) {
  SweepSpec spec;
  spec.base = sensitivity_base();
  spec.parameter = p;
  spec.values = std::move(values);
  spec.trend = expected_trend(p);
  return spec;
}

}  // namespace

std::vector<SweepSpec> sensitivity_sweeps() {
  return {
      make(Parameter::T, arithmetic(100, 10, 11)),
      make(Parameter::x_max, arithmetic(10, 1, 11)),
      make(Parameter::mu, arithmetic(10, 1, 11)),
      make(Parameter::delta1, arithmetic(0.0001, 0.0001, 10)),
      make(Parameter::delta2, arithmetic(0.001, 0.001, 10)),
      make(Parameter::alpha, arithmetic(0.01, 0.01, 10)),
      make(Parameter::omega1, arithmetic(100, 100, 10)),
      make(Parameter::omega2, arithmetic(10, 10, 10)),
  };
}

}  // namespace crp::benchmarks
