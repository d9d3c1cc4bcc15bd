#pragma once

// Independent reference computations shared by the tests. Each oracle uses
// a different numerical route from the production code.

#include <cmath>
#include <functional>
#include <vector>

#include "crp/instance.hpp"

namespace crp::oracle {

inline double central_difference(const std::function<double(double)>& f, double z,
                                 double step = 1e-6) {
  return (f(z + step) - f(z - step)) / (2.0 * step);
}

/// Root of a decreasing function g on [lo, hi] by bisection.
inline double bisect_decreasing(const std::function<double(double)>& g, double lo, double hi,
                                double tol = 1e-10) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// argmax of f over n + 1 evenly spaced points of [0, hi]; first maximum wins.
inline double grid_argmax(const std::function<double(double)>& f, double hi, std::size_t n) {
  double best_u = 0.0;
  double best = f(0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double u = hi * static_cast<double>(i) / static_cast<double>(n);
    const double v = f(u);
    if (v > best) { best = v; best_u = u; }
  }
  return best_u;
}

inline double beta(const InfluenceFunction& f, double z) {
  const double a = f.scale(), b = f.shape();
  switch (f.family()) {
    case InfluenceFamily::ScaledArctan: return a * std::atan(b * z);
    case InfluenceFamily::ScaledLog: return a * std::log(b * z + 1.0);
    case InfluenceFamily::PowerLaw: return a * std::pow(z, b);
  }
  return 0.0;
}

struct Trajectory {
  std::vector<double> A, I;
};

/// Explicit Euler on the state system with `substeps` substeps per grid
/// interval; the control is piecewise linear between grid samples.
inline Trajectory euler_state(const CrpInstance& inst, const std::vector<double>& x,
                              std::size_t substeps) {
  const std::size_t n = x.size() - 1;
  const double h = inst.T / static_cast<double>(n) / static_cast<double>(substeps);
  Trajectory out{{inst.A0}, {inst.I0}};
  double A = inst.A0, I = inst.I0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < substeps; ++s) {
      const double w = static_cast<double>(s) / static_cast<double>(substeps);
      const double u = (1.0 - w) * x[i] + w * x[i + 1];
      const double act = beta(inst.beta1, u) + beta(inst.beta2, std::max(A, 0.0));
      const double dA = act * I - (inst.alpha + inst.delta1) * A;
      const double dI = inst.mu - act * I + inst.alpha * A - inst.delta2 * I;
      A += h * dA;
      I += h * dI;
    }
    out.A.push_back(A);
    out.I.push_back(I);
  }
  return out;
}

}  // namespace crp::oracle
