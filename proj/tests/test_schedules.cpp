#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "saddle/errors.hpp"
#include "saddle/schedules.hpp"

using namespace saddle;

TEST_CASE("nesterov t sequence") {
  const auto t = nesterov_t(2);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == 1.0);
  // Frozen from a 30-digit evaluation of the recurrence.
  CHECK(t[1] == doctest::Approx(1.6180339887498948).epsilon(1e-15));
  CHECK(t[2] == doctest::Approx(2.1935270853310539).epsilon(1e-15));
  CHECK(nesterov_t(0).size() == 1);
  CHECK_THROWS_AS(nesterov_t(-1), DomainError);
}

TEST_CASE("schedule_params for each variant") {
  const MomentumParams n1 = schedule_params(MomentumSchedule::nesterov(), 1);
  CHECK(n1.beta == 0.0);
  CHECK(n1.gamma == 0.0);

  const MomentumParams a5 = schedule_params(MomentumSchedule::attouch(2.0), 5);
  CHECK(a5.beta == 0.5);
  CHECK(a5.gamma == 0.5);

  const MomentumParams toy = schedule_params(MomentumSchedule::toy(0.75, 0.02, 0.0), 3);
  CHECK(toy.beta == doctest::Approx(0.985).epsilon(1e-15));
  CHECK(toy.gamma == 0.0);

  const MomentumParams c = schedule_params(MomentumSchedule::constant(0.3, 0.2), 10);
  CHECK(c.beta == 0.3);
  CHECK(c.gamma == 0.2);

  const MomentumParams p = schedule_params(MomentumSchedule::polyak(0.25, 1.0), 1);
  CHECK(p.beta == doctest::Approx(1.0 / 3.0));
  CHECK(p.gamma == 0.0);
}

TEST_CASE("schedule_params rejects k < 1 and values outside [0,1]") {
  CHECK_THROWS_AS(schedule_params(MomentumSchedule::nesterov(), 0), DomainError);
  CHECK_THROWS_AS(schedule_params(MomentumSchedule::constant(1.5, 0.0), 1), ConfigError);
  CHECK_THROWS_AS(schedule_params(MomentumSchedule::constant(0.5, -0.1), 1), ConfigError);
  // alpha*delta + gamma_hat > 1 drives beta negative.
  CHECK_THROWS_AS(schedule_params(MomentumSchedule::toy(3.0, 0.5, 0.0), 1), ConfigError);
  CHECK_THROWS_AS(ScheduleStream(MomentumSchedule::toy(3.0, 0.5, 0.0)), ConfigError);
}

TEST_CASE("stream agrees with direct evaluation") {
  for (const MomentumSchedule& s : {MomentumSchedule::nesterov(), MomentumSchedule::attouch(3.0),
                                    MomentumSchedule::constant(0.4, 0.1)}) {
    ScheduleStream stream(s);
    for (long k = 1; k <= 60; ++k) {
      const MomentumParams a = stream.next();
      const MomentumParams b = s.at(k);
      CHECK(a.beta == b.beta);
      CHECK(a.gamma == b.gamma);
    }
  }
}

TEST_CASE("stream matches an independently coded nesterov weight sequence") {
  const auto ref = oracle::nesterov_weights(500);
  ScheduleStream stream(MomentumSchedule::nesterov());
  for (const auto& [b, g] : ref) {
    const MomentumParams p = stream.next();
    CHECK(p.beta == doctest::Approx(b).epsilon(1e-14));
    CHECK(p.gamma == doctest::Approx(g).epsilon(1e-14));
  }
}

TEST_CASE("nesterov and attouch weights are nondecreasing and in [0,1]") {
  for (const MomentumSchedule& s : {MomentumSchedule::nesterov(), MomentumSchedule::attouch(2.0),
                                    MomentumSchedule::attouch(0.1)}) {
    CHECK(s.nondecreasing());
    ScheduleStream stream(s);
    double prev = -1.0;
    for (long k = 1; k <= 20000; ++k) {
      const MomentumParams p = stream.next();
      CHECK_GE(p.beta, prev);
      CHECK_GE(p.beta, 0.0);
      CHECK_LE(p.beta, 1.0);
      prev = p.beta;
    }
  }
}

TEST_CASE("limits") {
  CHECK(MomentumSchedule::nesterov().limits().beta == 1.0);
  CHECK(MomentumSchedule::attouch(2.0).limits().gamma == 1.0);
  CHECK(MomentumSchedule::constant(0.3, 0.1).limits().beta == 0.3);
  CHECK(MomentumSchedule::toy(1.0, 0.01, 0.0).limits().beta == doctest::Approx(0.99));
}

TEST_CASE("polyak parameters") {
  const PolyakParams eq = polyak_params(1.0, 1.0);
  CHECK(eq.alpha == 1.0);
  CHECK(eq.beta == 0.0);

  const PolyakParams a = polyak_params(0.01, 1.0);
  CHECK(a.alpha == doctest::Approx(3.3057851239669421).epsilon(1e-14));
  CHECK(a.beta == doctest::Approx(0.81818181818181818).epsilon(1e-14));

  const PolyakParams b = polyak_params(0.25, 1.0);
  CHECK(b.alpha == doctest::Approx(1.7777777777777778).epsilon(1e-14));
  CHECK(b.beta == doctest::Approx(0.33333333333333333).epsilon(1e-14));

  CHECK_THROWS_AS(polyak_params(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(polyak_params(2.0, 1.0), DomainError);
}

TEST_CASE("polyak beta lies in [0,1) and vanishes only when m = L") {
  for (int i = 1; i <= 200; ++i) {
    const double L = 0.1 * i;
    for (double frac : {1e-6, 0.01, 0.3, 0.999, 1.0}) {
      const double beta = polyak_params(frac * L, L).beta;
      CHECK(beta >= 0.0);
      CHECK(beta < 1.0);
      CHECK((beta == 0.0) == (frac == 1.0));
    }
  }
}

TEST_CASE("t_k property report") {
  const TkReport r1000 = verify_tk_properties(1000);
  CHECK(r1000.ok());
  CHECK(r1000.identity_max_err <= 1e-9);
  const auto t = nesterov_t(1000);
  const double ratio = (t[999] - 1.0) / t[1000];
  CHECK(ratio >= 1.0 - 2.0 / (t[999] + 1.0));
  CHECK(ratio <= 1.0);
  CHECK(r1000.ratio_final == doctest::Approx(ratio));

  const TkReport r2 = verify_tk_properties(2);
  CHECK(r2.ratio_monotone);
  CHECK_THROWS_AS(verify_tk_properties(1), DomainError);
}

TEST_CASE("t_k report flags a violated tolerance instead of throwing") {
  const TkReport strict = verify_tk_properties(100, 0.0);
  // Rounding makes some identity residuals nonzero, so a zero tolerance fails.
  CHECK_FALSE(strict.identity_ok);
  CHECK_FALSE(strict.ok());
  CHECK(strict.bound_ok);
}

TEST_CASE("t_k lower bound and ratio limit up to 1e5") {
  const auto t = nesterov_t(100000);
  for (std::size_t k = 0; k < t.size(); ++k) CHECK_GE(t[k], (static_cast<double>(k) + 1.0) / 2.0);
  CHECK((t[99999] - 1.0) / t[100000] > 0.9999);
}
