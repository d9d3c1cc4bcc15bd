#include "crp/rng.hpp"

#include <algorithm>

namespace crp {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

UniformStream::UniformStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ull))) {}

double UniformStream::next_unit() noexcept {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double UniformStream::next(double lo, double hi) noexcept {
  return std::min(hi, lo + (hi - lo) * next_unit());
}

}  // namespace crp
