#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expurg/distance.hpp"
#include "expurg/exponents.hpp"
#include "expurg/optimize.hpp"
#include "test_support.hpp"

#include <array>
#include <cmath>
#include <thread>

using namespace expurg;

namespace {

ExponentInputs random_instance(std::mt19937_64& rng, int max_size = 4) {
  const int nx = 2 + static_cast<int>(rng() % (max_size - 1));
  const int ny = 2 + static_cast<int>(rng() % (max_size - 1));
  Channel ch = testsupport::random_channel(rng, nx, ny);
  InputDistribution q = testsupport::random_input(rng, nx);
  return ExponentInputs(std::move(ch), std::move(q));
}

}  // namespace

TEST_CASE("E0 vanishes at rho = 0 and for uninformative channels") {
  std::mt19937_64 rng(3);
  const ExponentInputs in = random_instance(rng);
  CHECK(gallager_E0(0.0, in) == doctest::Approx(0.0).epsilon(1e-12));

  ExponentInputs flat(testsupport::equal_rows_channel(3, 3), uniform_input(3));
  for (double rho : {0.0, 0.5, 1.0, 3.0})
    CHECK(gallager_E0(rho, flat) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("E0 of the binary identity channel at rho = 1 is ln 2") {
  // sum_y [sum_x q p^{1/2}]^2 = 2 (1/2)^2 = 1/2
  ExponentInputs in(testsupport::identity_channel(2), uniform_input(2));
  CHECK(gallager_E0(1.0, in) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("random-coding exponent at R = 0 equals E0(1)") {
  std::mt19937_64 rng(5);
  const ExponentInputs in = random_instance(rng);
  CHECK(random_coding_exponent(0.0, in) ==
        doctest::Approx(gallager_E0(1.0, in)).epsilon(1e-9));

  ExponentInputs flat(testsupport::equal_rows_channel(2, 2), uniform_input(2));
  CHECK(random_coding_exponent(1.0, flat) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("golden instance: E_G(1,Q) = 0.0542") {
  const ExponentInputs in = testsupport::example1();
  CHECK(std::abs(gallager_EG(1.0, 0.5, in) - 0.0542) < 5e-4);
}

TEST_CASE("golden instance: E(1,1/2,Q) = 0.0574") {
  const ExponentInputs in = testsupport::example1();
  CHECK(std::abs(ckm_E(1.0, 0.5, in) - 0.0574) < 5e-4);
}

TEST_CASE("golden instance: max_s E(1,s,Q) = 0.0596 at s* near 0.76") {
  const ExponentInputs in = testsupport::example1();
  const OptResult best =
      maximize_concave_unit([&](double s) { return ckm_E(1.0, s, in); });
  CHECK(std::abs(best.value - 0.0596) < 5e-4);
  CHECK(std::abs(best.arg - 0.76) < 0.02);
}

TEST_CASE("equal-rows channels have zero exponents everywhere") {
  ExponentInputs flat(testsupport::equal_rows_channel(3, 4), uniform_input(3));
  for (double rho : {1.0, 2.0, 7.5})
    for (double s : {0.1, 0.5, 0.9}) {
      CHECK(gallager_EG(rho, s, flat) == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(ckm_E(rho, s, flat) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("identity channel: only diagonal pairs survive") {
  ExponentInputs in(testsupport::identity_channel(2), uniform_input(2));
  CHECK(gallager_EG(1.0, 0.5, in) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // ckm_E collapses to rho H(Q) for any interior q
  Vector qv(2);
  qv << 0.3, 0.7;
  ExponentInputs skew(testsupport::identity_channel(2),
                      validate_input_distribution(qv));
  const double entropy = -(0.3 * std::log(0.3) + 0.7 * std::log(0.7));
  for (double rho : {1.0, 2.5})
    for (double s : {0.2, 0.5, 0.8})
      CHECK(ckm_E(rho, s, skew) ==
            doctest::Approx(rho * entropy).epsilon(1e-12));
}

TEST_CASE("Jensen ordering: ckm_E >= gallager_EG") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const ExponentInputs in = random_instance(rng);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    std::uniform_real_distribution<double> ur(1.0, 20.0);
    const double s = us(rng);
    const double rho = ur(rng);
    CHECK(ckm_E(rho, s, in) >= gallager_EG(rho, s, in) - 1e-12);
  }
}

TEST_CASE("Gallager form is symmetric in s about 1/2") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const ExponentInputs in = random_instance(rng);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    const double s = us(rng);
    const double a = gallager_EG(2.0, s, in);
    const double b = gallager_EG(2.0, 1.0 - s, in);
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("the maximizing s of the Gallager form is 1/2") {
  std::mt19937_64 rng(31);
  const ExponentInputs in = random_instance(rng);
  const OptResult best = maximize_concave_unit(
      [&](double s) { return gallager_EG(1.5, s, in); });
  CHECK(std::abs(best.arg - 0.5) < 1e-4);
}

TEST_CASE("E_x(1,Q) coincides with E_0(1,Q)") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const ExponentInputs in = random_instance(rng);
    CHECK(std::abs(gallager_EG(1.0, 0.5, in) - gallager_E0(1.0, in)) <=
          1e-12);
  }
  const ExponentInputs ex1 = testsupport::example1();
  CHECK(std::abs(gallager_EG(1.0, 0.5, ex1) - gallager_E0(1.0, ex1)) <= 1e-12);
}

TEST_CASE("ckm_E is concave in s at fixed rho") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const ExponentInputs in = random_instance(rng);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    const double s1 = us(rng), s2 = us(rng);
    const double mid = ckm_E(2.0, 0.5 * (s1 + s2), in);
    CHECK(mid >= 0.5 * (ckm_E(2.0, s1, in) + ckm_E(2.0, s2, in)) - 1e-12);
  }
}

TEST_CASE("asymmetric q: the s-derivative at 1/2 does not vanish") {
  const ExponentInputs in = testsupport::example1();
  const double h = 1e-5;
  const double deriv =
      (ckm_E(1.0, 0.5 + h, in) - ckm_E(1.0, 0.5 - h, in)) / (2.0 * h);
  CHECK(std::abs(deriv) > 1e-3);
}

TEST_CASE("zero-rate limit: sup_rho E(rho,s,Q) approaches the mean distance") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    Channel ch = testsupport::random_channel(rng, 3, 3);
    InputDistribution q = testsupport::random_input(rng, 3);
    const ExponentInputs in(std::move(ch), std::move(q));
    const double target = expected_distance(in.distance(0.5), in.q());
    const OptResult r = maximize_over_rho(
        [&](double rho) { return ckm_E(rho, 0.5, in); }, 1e4);
    CHECK_FALSE(r.diverged);
    CHECK(std::abs(r.value - target) < 1e-3);
  }
}

TEST_CASE("distance cache returns the exact same matrix") {
  const ExponentInputs in = testsupport::example1();
  const DistanceMatrix& a = in.distance(0.37);
  const DistanceMatrix fresh = chernoff_distance_matrix(in.channel(), 0.37);
  CHECK(a.d == fresh.d);
  const DistanceMatrix& b = in.distance(0.37);
  CHECK(&a == &b);  // memoized, not recomputed
}

TEST_CASE("concurrent readers share one inputs bundle") {
  const ExponentInputs in = testsupport::example1();
  const double expected = ckm_E(1.0, 0.5, in);

  std::vector<std::thread> workers;
  std::array<double, 4> results{};
  for (size_t t = 0; t < results.size(); ++t) {
    workers.emplace_back([&, t] {
      double v = 0.0;
      for (int i = 0; i < 50; ++i) {
        const double s = (i % 11) / 10.0;
        v = ckm_E(1.0, s, in);
        gallager_EG(2.0, s, in);
      }
      (void)v;
      results[t] = ckm_E(1.0, 0.5, in);
    });
  }
  for (auto& w : workers) w.join();
  for (double r : results) CHECK(r == expected);
}
