#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expurg/channel.hpp"
#include "expurg/distance.hpp"
#include "expurg/errors.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace expurg;

TEST_CASE("validate_channel accepts the golden binary channel") {
  Matrix t(2, 2);
  t << 0.5, 0.5, 1e-10, 1.0 - 1e-10;
  const Channel ch = validate_channel(t);
  CHECK(ch.input_size() == 2);
  CHECK(ch.transition.row(0).sum() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("validate_channel accepts the identity channel") {
  const Channel ch = testsupport::identity_channel(2);
  CHECK(ch.transition(0, 0) == 1.0);
  CHECK(ch.transition(0, 1) == 0.0);
}

TEST_CASE("validate_channel rejects a non-stochastic row") {
  Matrix t(2, 2);
  t << 0.6, 0.5, 0.5, 0.5;
  CHECK_THROWS_AS(validate_channel(t), NonStochasticRow);
}

TEST_CASE("validate_channel rejects negative entries") {
  Matrix t(2, 2);
  t << 1.1, -0.1, 0.5, 0.5;
  CHECK_THROWS_AS(validate_channel(t), NegativeEntry);
}

TEST_CASE("validate_channel renormalizes sub-tolerance drift") {
  Matrix t(2, 2);
  t << 0.5, 0.5 + 5e-13, 0.25, 0.75;
  const Channel ch = validate_channel(t);
  CHECK(ch.transition.row(0).sum() == 1.0);
}

TEST_CASE("validate_channel needs two inputs") {
  Matrix t(1, 2);
  t << 0.5, 0.5;
  CHECK_THROWS_AS(validate_channel(t), NonStochasticRow);
}

TEST_CASE("input distribution validation") {
  Vector good(2);
  good << 0.9, 0.1;
  CHECK(validate_input_distribution(good).probs(1) == doctest::Approx(0.1));

  Vector bad(2);
  bad << 0.9, 0.2;
  CHECK_THROWS_AS(validate_input_distribution(bad), NotADistribution);

  Vector neg(2);
  neg << 1.1, -0.1;
  CHECK_THROWS_AS(validate_input_distribution(neg), NegativeEntry);
}

TEST_CASE("Bhattacharyya distance of BSC(0.1)") {
  // hand evaluation: d(0,1) = -ln(2 sqrt(0.09)) = -ln 0.6
  const Channel ch = testsupport::bsc(0.1);
  const DistanceMatrix dm = chernoff_distance_matrix(ch, 0.5);
  const double expected = -std::log(0.6);
  CHECK(dm.d(0, 1) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(dm.d(1, 0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(dm.d(0, 0) == 0.0);
}

TEST_CASE("identity channel has infinite off-diagonal distance") {
  const Channel ch = testsupport::identity_channel(2);
  for (double s : {0.25, 0.5, 0.75}) {
    const DistanceMatrix dm = chernoff_distance_matrix(ch, s);
    CHECK(is_pos_inf(dm.d(0, 1)));
    CHECK(dm.d(0, 0) == 0.0);
    CHECK(dm.d(1, 1) == 0.0);
  }
}

TEST_CASE("equal rows make every distance zero") {
  const Channel ch = testsupport::equal_rows_channel(3, 4);
  for (double s : {0.0, 0.3, 0.5, 1.0}) {
    const DistanceMatrix dm = chernoff_distance_matrix(ch, s);
    CHECK(dm.d.maxCoeff() == 0.0);
  }
}

TEST_CASE("s outside [0,1] is rejected") {
  const Channel ch = testsupport::bsc(0.2);
  CHECK_THROWS_AS(chernoff_distance_matrix(ch, -0.1), DomainError);
  CHECK_THROWS_AS(chernoff_distance_matrix(ch, 1.1), DomainError);
}

TEST_CASE("distances are nonnegative, symmetric at s=1/2, zero diagonal") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int nx = 2 + static_cast<int>(rng() % 3);
    const int ny = 1 + static_cast<int>(rng() % 4);
    const Channel ch = testsupport::random_channel(rng, nx, ny);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    const double s = us(rng);

    const DistanceMatrix dm = chernoff_distance_matrix(ch, s);
    for (Index x = 0; x < nx; ++x)
      for (Index xp = 0; xp < nx; ++xp) CHECK(dm.d(x, xp) >= 0.0);

    const DistanceMatrix bh = chernoff_distance_matrix(ch, 0.5);
    for (Index x = 0; x < nx; ++x) {
      CHECK(bh.d(x, x) == 0.0);
      for (Index xp = 0; xp < nx; ++xp)
        CHECK(bh.d(x, xp) == doctest::Approx(bh.d(xp, x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("full-support rows give zero distance at s = 0 and s = 1") {
  std::mt19937_64 rng(11);
  const Channel ch = testsupport::random_channel(rng, 3, 3);
  for (double s : {0.0, 1.0}) {
    const DistanceMatrix dm = chernoff_distance_matrix(ch, s);
    CHECK(dm.d.maxCoeff() <= 1e-14);
  }
}

TEST_CASE("d_s is concave in s (midpoint check)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const Channel ch = testsupport::random_channel(rng, 3, 3);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    double s1 = us(rng), s2 = us(rng);
    const DistanceMatrix a = chernoff_distance_matrix(ch, s1);
    const DistanceMatrix b = chernoff_distance_matrix(ch, s2);
    const DistanceMatrix mid = chernoff_distance_matrix(ch, 0.5 * (s1 + s2));
    for (Index x = 0; x < 3; ++x)
      for (Index xp = 0; xp < 3; ++xp)
        CHECK(mid.d(x, xp) >= 0.5 * (a.d(x, xp) + b.d(x, xp)) - 1e-12);
  }
}

TEST_CASE("zero-probability convention keeps d_s continuous at the edges") {
  // p(.|0) = (0.5, 0.5), p(.|1) = (0, 1): d_s(0,1) = (1-s) ln 2 on (0,1),
  // and the limit convention extends that value to s = 0
  Matrix t(2, 2);
  t << 0.5, 0.5, 0.0, 1.0;
  const Channel ch = validate_channel(t);
  const double ln2 = std::log(2.0);
  CHECK(chernoff_distance_matrix(ch, 0.25).d(0, 1) ==
        doctest::Approx(0.75 * ln2).epsilon(1e-12));
  CHECK(chernoff_distance_matrix(ch, 0.0).d(0, 1) ==
        doctest::Approx(ln2).epsilon(1e-12));
  CHECK(chernoff_distance_matrix(ch, 1.0).d(0, 1) == 0.0);
}

TEST_CASE("expected_distance basics") {
  std::mt19937_64 rng(17);

  const Channel eq = testsupport::equal_rows_channel(2, 3);
  const InputDistribution q2 = testsupport::random_input(rng, 2);
  CHECK(expected_distance(chernoff_distance_matrix(eq, 0.5), q2) == 0.0);

  const Channel id = testsupport::identity_channel(2);
  CHECK(is_pos_inf(
      expected_distance(chernoff_distance_matrix(id, 0.5), q2)));

  // 2 q0 q1 d_B(0,1) with d_B = -ln 0.6
  const Channel bsc = testsupport::bsc(0.1);
  const InputDistribution uq = uniform_input(2);
  CHECK(expected_distance(chernoff_distance_matrix(bsc, 0.5), uq) ==
        doctest::Approx(-0.5 * std::log(0.6)).epsilon(1e-12));
}
