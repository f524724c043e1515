#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expurg/errors.hpp"
#include "expurg/optimize.hpp"

#include <cmath>
#include <vector>

using namespace expurg;

TEST_CASE("maximize_concave_unit on a quadratic") {
  const OptResult r =
      maximize_concave_unit([](double s) { return -(s - 0.3) * (s - 0.3); });
  CHECK(r.arg == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(r.at_boundary);
}

TEST_CASE("maximize_concave_unit on a constant") {
  const OptResult r = maximize_concave_unit([](double) { return 2.5; });
  CHECK(r.value == 2.5);
  CHECK(r.arg >= 0.0);
  CHECK(r.arg <= 1.0);
}

TEST_CASE("maximize_concave_unit snaps boundary maxima") {
  const OptResult left = maximize_concave_unit([](double s) { return -s; });
  CHECK(left.arg == 0.0);
  CHECK(left.at_boundary);

  const OptResult right = maximize_concave_unit([](double s) { return s; });
  CHECK(right.arg == 1.0);
  CHECK(right.value == 1.0);
}

TEST_CASE("NaN objectives raise NonFiniteObjective") {
  CHECK_THROWS_AS(
      maximize_concave_unit([](double) { return std::nan(""); }),
      NonFiniteObjective);
}

TEST_CASE("maximize_over_rho finds an interior optimum") {
  const OptResult r = maximize_over_rho(
      [](double rho) { return -(rho - 2.0) * (rho - 2.0) + 5.0; }, 100.0);
  CHECK(r.arg == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(5.0).epsilon(1e-9));
  CHECK_FALSE(r.diverged);
}

TEST_CASE("maximize_over_rho flags linear growth as diverged") {
  const double slope = 0.2;
  const OptResult r =
      maximize_over_rho([&](double rho) { return slope * rho; }, 1e4);
  CHECK(r.diverged);
  CHECK(r.arg == 1e4);
  CHECK(r.value == doctest::Approx(slope * 1e4));
}

TEST_CASE("an asymptote-approaching objective is not flagged") {
  // climbs toward 1 like 1 - 1/rho: tail slope ~ 1/rho^2, below threshold
  const OptResult r =
      maximize_over_rho([](double rho) { return 1.0 - 1.0 / rho; }, 1e4);
  CHECK_FALSE(r.diverged);
  CHECK(r.at_boundary);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("decreasing objectives report the lower boundary exactly") {
  const OptResult r =
      maximize_over_rho([](double rho) { return -0.7 * rho; }, 1e4);
  CHECK(r.arg == 1.0);
  CHECK(r.value == -0.7);
  CHECK(r.at_boundary);
}

TEST_CASE("grid-then-refine never loses to its own coarse grid") {
  // deliberately wiggly objective; reconstruct the 64-point log grid and
  // compare against the reported maximum
  const auto f = [](double x) { return std::sin(3.0 * std::log(x)) / x + 0.2; };
  const OptResult r = maximize_grid_then_refine(f, 1.0, 1e4, 64, true);
  for (int i = 0; i < 64; ++i) {
    const double x = std::exp(std::log(1e4) * i / 63.0);
    CHECK(r.value >= f(x) - 1e-15);
  }
}

TEST_CASE("maximize_on_interval respects the argument tolerance") {
  for (double target : {0.11, 1.7, 3.9}) {
    const OptResult r = maximize_on_interval(
        [&](double x) { return -(x - target) * (x - target); }, 0.0, 4.0,
        1e-9);
    CHECK(r.arg == doctest::Approx(target).epsilon(1e-6));
  }
}
