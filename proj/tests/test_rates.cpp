#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "saddle/errors.hpp"
#include "saddle/experiments.hpp"
#include "saddle/optimizers.hpp"
#include "saddle/rates.hpp"

using namespace saddle;

namespace {

// Direct fixed-point iteration of b -> (beta + gamma a) b / (1 + b) + a.
double fixed_point(double a, double beta, double gamma) {
  double b = a;
  for (int i = 0; i < 2000000; ++i) {
    const double next = (beta + gamma * a) * b / (1.0 + b) + a;
    if (std::abs(next - b) <= 1e-16 * next) return next;
    b = next;
  }
  return b;
}

}  // namespace

TEST_CASE("first rate equals alpha |lambda|") {
  const RateSequence r = b_sequence(-0.02, 0.5, MomentumSchedule::nesterov(), 3);
  CHECK(r.values[0] == 0.0);
  CHECK(r.values[1] == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(r.K() == 3);
}

TEST_CASE("zero momentum gives the gradient-descent rate") {
  const RateSequence r = b_sequence(-0.1, 0.5, MomentumSchedule::constant(0.0, 0.0), 50);
  for (long k = 1; k <= 50; ++k) CHECK(r.values[static_cast<std::size_t>(k)] == doctest::Approx(0.05).epsilon(1e-15));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(b_sequence(0.0, 0.5, MomentumSchedule::nesterov(), 3), DomainError);
  CHECK_THROWS_AS(b_sequence(-0.1, 0.0, MomentumSchedule::nesterov(), 3), DomainError);
  CHECK_THROWS_AS(b_sequence(-0.1, 0.5, MomentumSchedule::nesterov(), 0), DomainError);
  CHECK_THROWS_AS(predicted_escape_iters(0.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(predicted_escape_iters(0.1, 0.0, 2.0), DomainError);
}

TEST_CASE("rates are nondecreasing and bounded below by alpha |lambda| for nondecreasing schedules") {
  for (double a : {1e-4, 1e-3, 1e-2, 0.1, 1.0}) {
    for (const MomentumSchedule& s :
         {MomentumSchedule::nesterov(), MomentumSchedule::attouch(2.0), MomentumSchedule::constant(0.9, 0.9)}) {
      const RateSequence r = b_sequence(-a, 1.0, s, 2000);
      for (long k = 1; k <= 2000; ++k) {
        const double b = r.values[static_cast<std::size_t>(k)];
        CHECK(b >= a * (1.0 - 1e-15));
        CHECK(b >= r.values[static_cast<std::size_t>(k - 1)] * (1.0 - 1e-15));
      }
    }
  }
}

TEST_CASE("limit solves its quadratic and matches fixed-point iteration") {
  for (double a : {1e-4, 1e-2, 0.3, 1.0}) {
    for (auto [beta, gamma] : std::vector<std::pair<double, double>>{{1, 1}, {0.9, 0.0}, {0.5, 0.5}, {0, 0}}) {
      const RateLimit lim = b_limit(-a, 1.0, beta, gamma);
      CHECK(std::abs(lim.residual()) <= 1e-12 * std::max(1.0, lim.bar_b));
      CHECK(oracle::rel_err(lim.bar_b, fixed_point(a, beta, gamma)) <= 1e-9);
    }
  }
}

TEST_CASE("limit special cases") {
  for (double a : {1e-4, 1e-2, 1.0}) {
    CHECK(oracle::rel_err(b_limit(-a, 1.0, 1.0, 1.0).bar_b, a + std::sqrt(a) * std::sqrt(1.0 + a)) <= 1e-12);
    CHECK(oracle::rel_err(b_limit(-a, 1.0, 1.0 - a, 0.0).bar_b, std::sqrt(a)) <= 1e-12);
    CHECK(oracle::rel_err(b_limit(-a, 1.0, 0.0, 0.0).bar_b, a) <= 1e-12);
  }
  CHECK(b_limit(-0.01, 1.0, 1.0, 1.0).bar_b == doctest::Approx(0.1104987562112089).epsilon(1e-14));
  CHECK(b_limit(-0.01, 1.0, MomentumSchedule::nesterov()).bar_b ==
        doctest::Approx(0.1104987562112089).epsilon(1e-14));
}

TEST_CASE("accelerated limit dominates heavy-ball and gradient-descent rates") {
  for (double a = 1e-5; a <= 1.0; a *= 3.0) {
    const double acc = b_limit(-a, 1.0, 1.0, 1.0).bar_b;
    const double hb = b_limit(-a, 1.0, 1.0 - a, 0.0).bar_b;
    CHECK(acc >= hb);
    CHECK(hb >= a);
  }
}

TEST_CASE("product of growth factors reproduces the simulated coordinate") {
  const QuadraticProblem prob({1.0, 0.5, -0.01});
  const QuadraticOracle oracle(prob);
  const Vector x0{{0.3, -0.2, 0.05}};
  for (const MomentumSchedule& s : {MomentumSchedule::nesterov(), MomentumSchedule::attouch(2.0),
                                    MomentumSchedule::constant(0.8, 0.3)}) {
    const IterationTrace t = run_accelerated(oracle, 0.99, s, x0, EqualToX0{}, 200);
    const RateSequence r = b_sequence(-0.01, 0.99, s, 200);
    CHECK(product_reconstruction(0.05, r, 0) == 0.05);
    CHECK(product_reconstruction(0.05, r, 1) == doctest::Approx(0.05 * (1.0 + 0.99 * 0.01)).epsilon(1e-15));
    double worst = 0.0;
    for (long k = 0; k <= 200; ++k) worst = std::max(worst, oracle::rel_err(product_reconstruction(0.05, r, k), t.at(k)[2]));
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("quasi-static limit tracks the rate sequence closely at large K") {
  for (double a : {1e-4, 1e-2, 1.0}) {
    const RateSequence r = b_sequence(-a, 1.0, MomentumSchedule::nesterov(), 10000);
    const MomentumParams pk = schedule_params(MomentumSchedule::nesterov(), 10000);
    const double quasi = b_limit(-a, 1.0, pk.beta, pk.gamma).bar_b;
    CHECK(std::abs(r.final() - quasi) <= 1e-6);
    const double bar = b_limit(-a, 1.0, 1.0, 1.0).bar_b;
    CHECK(r.final() < bar);
    // The gap to the limit shrinks as K grows.
    CHECK(bar - r.values[10000] < bar - r.values[1000]);
  }
}

TEST_CASE("toy escape bounds") {
  const EscapeBounds b = escape_bounds(0.02, 1.0, 0.01);
  CHECK(b.gd_bound == 231);
  CHECK(b.hb_bound == 21);
  const EscapeBounds one = escape_bounds(0.02, 1.0, 1.0);
  CHECK(one.gd_bound == 0);
  CHECK(one.hb_bound == 2);
  CHECK_THROWS_AS(escape_bounds(0.0, 1.0, 0.01), DomainError);
  CHECK_THROWS_AS(escape_bounds(0.02, 1.0, 0.0), DomainError);
}

TEST_CASE("predicted escape iterations") {
  CHECK(predicted_escape_iters(0.110499, 0.1, 100.0) == 66);
  CHECK(predicted_escape_iters(0.1, 5.0, 2.0) == 0);
  // Defining inequality at the returned k and not at k - 1.
  const long k = predicted_escape_iters(0.0371, 0.37, 100.0);
  CHECK(0.37 * std::pow(1.0371, static_cast<double>(k)) >= 100.0);
  CHECK(0.37 * std::pow(1.0371, static_cast<double>(k - 1)) < 100.0);
}

TEST_CASE("predictor row matches the published magnitude") {
  TableSpec spec;
  spec.ns = {100};
  spec.deltas = {1e-2};
  spec.seed = 5;
  double sum = 0.0;
  const int trials = 40;
  for (int t = 0; t < trials; ++t) sum += static_cast<double>(run_table_trial(spec, 100, 1e-2, 0, t).predictor_iters);
  const double mean = sum / trials;
  CHECK(mean >= 46.0 * 0.7);
  CHECK(mean <= 46.0 * 1.3);
}
