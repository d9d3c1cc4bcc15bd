#pragma once

#include <cstdint>
#include <random>

namespace crp {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Portable uniform stream: std::mt19937_64 (fully specified by the
/// standard) seeded from (seed, stream) via SplitMix64, with doubles built
/// from the top 53 bits. Unlike std::uniform_real_distribution this gives
/// identical sequences on every standard library.
class UniformStream {
 public:
  UniformStream(std::uint64_t seed, std::uint64_t stream);

  /// Uniform on [0, 1).
  double next_unit() noexcept;
  /// Uniform on [lo, hi].
  double next(double lo, double hi) noexcept;

 private:
  std::mt19937_64 engine_;
};

}  // namespace crp
