#include "crp/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace crp {

TimeGrid::TimeGrid(double horizon, std::size_t intervals)
    : horizon_(horizon), intervals_(intervals) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("time grid horizon must be positive and finite");
  }
  if (intervals < 2) {
    throw std::invalid_argument("time grid needs at least 2 subintervals");
  }
}

ControlPolicy::ControlPolicy(TimeGrid grid, std::vector<double> values, double x_max)
    : grid_(grid), values_(std::move(values)), x_max_(x_max) {
  if (values_.size() != grid_.points()) {
    throw std::invalid_argument("policy has " + std::to_string(values_.size()) +
                                " samples, grid has " + std::to_string(grid_.points()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0 && values_[i] <= x_max_)) {
      throw std::invalid_argument("policy value at index " + std::to_string(i) +
                                  " lies outside [0, x_max]");
    }
  }
}

ControlPolicy ControlPolicy::constant(TimeGrid grid, double value, double x_max) {
  return {grid, std::vector<double>(grid.points(), value), x_max};
}

double ControlPolicy::at(double t) const {
  if (t <= 0.0) return values_.front();
  if (t >= grid_.horizon()) return values_.back();
  const double s = t / grid_.step();
  const auto i = std::min(static_cast<std::size_t>(s), grid_.intervals() - 1);
  const double w = s - static_cast<double>(i);
  return (1.0 - w) * values_[i] + w * values_[i + 1];
}

double total_variation(std::span<const double> values) {
  double tv = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) tv += std::abs(values[i] - values[i - 1]);
  return tv;
}

}  // namespace crp
