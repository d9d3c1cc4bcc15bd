#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "crp/influence.hpp"
#include "crp/kernels/kernels.hpp"
#include "crp/rng.hpp"
#include "oracles.hpp"

using namespace crp;
using kernels::ControlBounds;

namespace {

std::vector<double> uniform(std::size_t n, double lo, double hi, std::uint64_t stream) {
  UniformStream rng(7, stream);
  std::vector<double> v(n);
  for (double& x : v) x = rng.next(lo, hi);
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("pointwise maximizer cases") {
  const auto b1 = InfluenceFunction::scaled_arctan(0.05, 0.3);
  const ControlBounds bounds = ControlBounds::make(b1, 10.0, 1.0);
  const auto G = [&](double coeff) {
    return [&, coeff](double u) { return coeff * oracle::beta(b1, u) - u; };
  };

  CHECK(kernels::optimal_control(-5.0, bounds) == 0.0);
  CHECK(kernels::optimal_control(0.0, bounds) == 0.0);
  CHECK(kernels::optimal_control(1000.0, bounds) == 10.0);
  CHECK(oracle::grid_argmax(G(1000.0), 10.0, 1000000) == 10.0);

  const double interior = kernels::optimal_control(200.0, bounds);
  CHECK(interior == doctest::Approx(4.7140).epsilon(1e-4));
  CHECK(std::abs(interior - oracle::grid_argmax(G(200.0), 10.0, 1000000)) < 1e-4);

  // Slope at zero below the cost: no response.
  CHECK(kernels::optimal_control(50.0, bounds) == 0.0);
}

TEST_CASE("trapezoid of a linear function is exact") {
  std::vector<double> y(1001);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = 3.0 + 0.5 * static_cast<double>(i) * 0.01;
  CHECK(kernels::scalar_table().trapezoid(y, 0.01) == doctest::Approx(3.0 * 10.0 + 0.25 * 100.0));
}

TEST_CASE("dispatched table is available") {
  const auto& t = kernels::active();
  CHECK(t.name != nullptr);
  if (const char* env = std::getenv("CRP_SIMD"); env && std::string(env) == "scalar") {
    CHECK(t.isa == kernels::Isa::Scalar);
  }
}

TEST_CASE("AVX2 kernels reproduce the scalar kernels") {
  const kernels::KernelTable* simd = kernels::avx2_table();
  if (simd == nullptr) {
    MESSAGE("AVX2 not available; equivalence skipped");
    return;
  }
  const kernels::KernelTable& ref = kernels::scalar_table();

  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 5001u}) {
    const auto a = uniform(n, -2.0, 8.0, 1);
    const auto b = uniform(n, -2.0, 8.0, 2);
    CHECK(simd->sup_norm_diff(a, b) == ref.sup_norm_diff(a, b));
    if (n >= 2) {
      const double s = ref.trapezoid(a, 0.01);
      CHECK(simd->trapezoid(a, 0.01) == doctest::Approx(s).epsilon(1e-13));
    }

    auto out_ref = a, out_simd = a;
    ref.blend(out_ref, b, 0.3);
    simd->blend(out_simd, b, 0.3);
    CHECK(bit_equal(out_ref, out_simd));
  }

  const std::vector<InfluenceFunction> families = {
      InfluenceFunction::scaled_arctan(0.05, 0.3), InfluenceFunction::scaled_log(0.01, 0.01),
      InfluenceFunction::power_law(0.02, 0.5)};
  for (const auto& f : families) {
    for (double omega1 : {1.0, 1000.0}) {
      const ControlBounds bounds = ControlBounds::make(f, 10.0, omega1);
      const std::size_t n = 5001;
      // Wide adjoint ranges so every branch of the maximizer is hit.
      const auto l1 = uniform(n, -50.0, 400.0, 3);
      const auto l2 = uniform(n, -50.0, 50.0, 4);
      const auto inactive = uniform(n, 0.0, 12000.0, 5);
      std::vector<double> out_ref(n), out_simd(n);
      ref.control_update(bounds, l1, l2, inactive, out_ref);
      simd->control_update(bounds, l1, l2, inactive, out_simd);
      CHECK(bit_equal(out_ref, out_simd));
      for (std::size_t i = 0; i < n; i += 97) {
        CHECK(out_ref[i] == kernels::optimal_control((l1[i] - l2[i]) * inactive[i], bounds));
      }
    }
  }
}
