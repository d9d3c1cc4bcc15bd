#pragma once

#include <vector>

#include "crp/experiments.hpp"
#include "crp/instance.hpp"

// Reference instances used by the regression and sensitivity experiments.

namespace crp::benchmarks {

/// arctan response influence, log peer influence, T = 50.
CrpInstance m1();
/// Power-law influences, T = 80.
CrpInstance m2();
/// log response influence, arctan peer influence, T = 100.
CrpInstance m3();

/// Shared base of the sensitivity sweeps (T = 100, x_max = 15, omega1 = 800).
CrpInstance sensitivity_base();

/// The eight one-parameter sweeps with their value sets and expected trends,
/// in the order T, x_max, mu, delta1, delta2, alpha, omega1, omega2.
std::vector<SweepSpec> sensitivity_sweeps();

}  // namespace crp::benchmarks
