#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "crp/benchmarks.hpp"
#include "crp/experiments.hpp"
#include "crp/rng.hpp"

using namespace crp;

TEST_CASE("uniform streams are deterministic and independent") {
  UniformStream a(42, 0), b(42, 0), c(42, 1);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.next_unit();
    CHECK(x == b.next_unit());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    differs = differs || x != c.next_unit();
  }
  CHECK(differs);
}

TEST_CASE("random policies stay in range and centre on x_max / 2") {
  const TimeGrid grid(1.0, 9999);
  const ControlPolicy x = random_feasible_policy(grid, 10.0, 3, 0);
  double sum = 0.0;
  for (double v : x.values()) {
    CHECK(v >= 0.0);
    CHECK(v <= 10.0);
    sum += v;
  }
  const double mean = sum / static_cast<double>(grid.points());
  CHECK(mean >= 4.8);
  CHECK(mean <= 5.2);

  const ControlPolicy again = random_feasible_policy(grid, 10.0, 3, 0);
  CHECK(std::equal(x.values().begin(), x.values().end(), again.values().begin()));
}

TEST_CASE("trend checks") {
  const std::vector<double> v{1, 2, 3};
  CHECK(check_trend(v, std::vector<double>{1, 2, 3}, TrendMode::Increasing).pass);

  const TrendVerdict down = check_trend(v, std::vector<double>{3, 2, 2.5}, TrendMode::Decreasing);
  CHECK_FALSE(down.pass);
  REQUIRE(down.failing_index.has_value());
  CHECK(*down.failing_index == 2);

  const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(check_trend(x, std::vector<double>{0, 10, 18, 24, 28, 30, 31, 31.5, 31.6},
                    TrendMode::IncreasingSaturating).pass);
  CHECK_FALSE(check_trend(x, std::vector<double>{0, 1, 2, 3, 4, 5, 6, 7, 8},
                          TrendMode::IncreasingSaturating).pass);

  CHECK_THROWS_AS(check_trend(v, std::vector<double>{1, 2}, TrendMode::Increasing), std::invalid_argument);
  CHECK(parse_trend(trend_name(TrendMode::IncreasingSaturating)) == TrendMode::IncreasingSaturating);
}

TEST_CASE("policy shape check") {
  const TimeGrid grid(1.0, 3);
  const PolicyShape good = check_policy_shape(ControlPolicy(grid, {10, 8, 8, 0}, 10.0));
  CHECK(good.starts_at_max);
  CHECK(good.non_increasing);
  const PolicyShape bad = check_policy_shape(ControlPolicy(grid, {9, 8, 8.5, 0}, 10.0));
  CHECK_FALSE(bad.starts_at_max);
  CHECK_FALSE(bad.non_increasing);
  CHECK(bad.largest_increase_at == 2);
  CHECK(bad.largest_increase == doctest::Approx(0.5));
}

TEST_CASE("sweep policy beats random policies") {
  const RandomComparison c = compare_against_random(benchmarks::m1(), GridConfig{1000}, FbsConfig{}, 10, 1);
  CHECK(c.converged);
  CHECK(c.random_objectives.size() == 10);
  CHECK(c.fraction_beaten == 1.0);

  const RandomComparison again = compare_against_random(benchmarks::m1(), GridConfig{1000}, FbsConfig{}, 10, 1);
  CHECK(again.random_objectives == c.random_objectives);
}

TEST_CASE("sweeps") {
  SweepSpec spec;
  spec.base = benchmarks::sensitivity_base();
  spec.parameter = Parameter::mu;
  spec.values = {12.0};
  const SweepResult single = run_sweep(spec, GridConfig{1000}, FbsConfig{});
  CHECK(single.records.size() == 1);
  CHECK(single.verdict.trivial);

  spec.values = {10, 12, 14, 16, 18, 20};
  const SweepResult mu = run_sweep(spec, GridConfig{1000}, FbsConfig{});
  CHECK(mu.verdict.pass);
  for (std::size_t i = 0; i < spec.values.size(); ++i) CHECK(mu.records[i].value == spec.values[i]);

  spec.values = {12, 11};
  CHECK_THROWS_AS(run_sweep(spec, GridConfig{1000}, FbsConfig{}), std::invalid_argument);
  spec.values = {-1, 12};
  CHECK_THROWS_WITH_AS(run_sweep(spec, GridConfig{1000}, FbsConfig{}),
                       doctest::Contains("mu"), std::invalid_argument);
}

TEST_CASE("benchmark sweeps are well formed") {
  const auto sweeps = benchmarks::sensitivity_sweeps();
  REQUIRE(sweeps.size() == 8);
  for (const SweepSpec& s : sweeps) {
    CHECK_NOTHROW(s.validate());
    CHECK(s.trend == expected_trend(s.parameter));
  }
  CHECK(sweeps[0].values.size() == 11);
  CHECK(expected_trend(Parameter::x_max) == TrendMode::IncreasingSaturating);
  CHECK(expected_trend(Parameter::alpha) == TrendMode::Decreasing);
}

TEST_CASE("larger response caps never hurt") {
  SweepSpec spec;
  spec.base = benchmarks::sensitivity_base();
  spec.parameter = Parameter::x_max;
  spec.values = {10, 12, 15, 20};
  const SweepResult r = run_sweep(spec, GridConfig{1000}, FbsConfig{});
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    CHECK(r.records[i].objective >= r.records[i - 1].objective - 1e-6 * r.records[i].objective);
  }
}

TEST_CASE("replicated claims on jittered instances") {
  const ReplicationSummary s = replicate_claims(3, 5, 11, GridConfig{500}, FbsConfig{});
  CHECK(s.bases == 3);
  CHECK(s.converged == 3);
  CHECK(s.beat_all_random == 3);
}
