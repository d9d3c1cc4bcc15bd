#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace crp {

/// Number of uniform subintervals of [0, T].
struct GridConfig {
  std::size_t intervals = 5000;
};

/// Uniform time grid 0 = t_0 < ... < t_N = T with N >= 2.
class TimeGrid {
 public:
  TimeGrid(double horizon, std::size_t intervals);
  TimeGrid(double horizon, GridConfig cfg) : TimeGrid(horizon, cfg.intervals) {}

  double horizon() const noexcept { return horizon_; }
  std::size_t intervals() const noexcept { return intervals_; }
  std::size_t points() const noexcept { return intervals_ + 1; }
  double step() const noexcept { return horizon_ / static_cast<double>(intervals_); }
  double time(std::size_t i) const noexcept {
    return i == intervals_ ? horizon_ : static_cast<double>(i) * step();
  }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  double horizon_;
  std::size_t intervals_;
};

/// Response rate sampled on a time grid; bounded to [0, x_max] at every
/// grid point. Values between grid points are linearly interpolated.
class ControlPolicy {
 public:
  /// Throws std::invalid_argument when the sample count does not match the
  /// grid or any value leaves [0, x_max].
  ControlPolicy(TimeGrid grid, std::vector<double> values, double x_max);

  static ControlPolicy constant(TimeGrid grid, double value, double x_max);

  const TimeGrid& grid() const noexcept { return grid_; }
  double x_max() const noexcept { return x_max_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double at(double t) const;

 private:
  TimeGrid grid_;
  std::vector<double> values_;
  double x_max_;
};

struct StateTrajectory {
  TimeGrid grid;
  std::vector<double> active;    // A
  std::vector<double> inactive;  // I
};

struct AdjointTrajectory {
  TimeGrid grid;
  std::vector<double> lambda1;
  std::vector<double> lambda2;
};

/// Sum of |x_{i+1} - x_i| over the samples.
double total_variation(std::span<const double> values);

}  // namespace crp
