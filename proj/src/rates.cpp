#include "saddle/rates.hpp"

#include <algorithm>
#include <cmath>

#include "saddle/errors.hpp"

namespace saddle {

RateSequence b_sequence(double lambda, double alpha, const MomentumSchedule& schedule, long K) {
  if (!(lambda < 0.0)) throw DomainError("b_sequence requires lambda < 0");
  if (!(alpha > 0.0)) throw DomainError("b_sequence requires alpha > 0");
  if (K < 1) throw DomainError("b_sequence requires K >= 1");
  RateSequence seq{lambda, alpha, schedule, {}};
  seq.values.reserve(static_cast<std::size_t>(K) + 1);
  seq.values.push_back(0.0);
  const double a = alpha * std::abs(lambda);
  ScheduleStream params(schedule);
  double b = 0.0;
  for (long k = 1; k <= K; ++k) {
    const MomentumParams p = params.next();
    // b/(1+b) == 1 - 1/(1+b) without the cancellation for small b.
    b = (p.beta + p.gamma * a) * (b / (1.0 + b)) + a;
    seq.values.push_back(b);
  }
  return seq;
}

double product_reconstruction(double x0_i, const RateSequence& rate, long k) {
  if (k < 0 || k > rate.K()) throw DomainError("product_reconstruction: k outside [0, K]");
  double x = x0_i;
  for (long m = 0; m <= k; ++m) x *= 1.0 + rate.values[static_cast<std::size_t>(m)];
  return x;
}

double RateLimit::residual() const {
  const double a = alpha * std::abs(lambda);
  const double b = bar_b;
  return a + (1.0 + a + beta_bar + gamma_bar * a) * b - 2.0 * b - b * b;
}

RateLimit b_limit(double lambda, double alpha, double beta_bar, double gamma_bar) {
  const double a = alpha * std::abs(lambda);
  const double c = beta_bar - 1.0 + a * (1.0 + gamma_bar);
  const double root = std::sqrt(c * c + 4.0 * a);
  // Roots of b^2 - c b - a multiply to -a; for c < 0 the positive root is
  // taken from the product to avoid cancellation.
  const double bar_b = c >= 0.0 ? 0.5 * (c + root) : 2.0 * a / (root - c);
  return {bar_b, lambda, alpha, beta_bar, gamma_bar};
}

RateLimit b_limit(double lambda, double alpha, const MomentumSchedule& schedule) {
  const MomentumParams lim = schedule.limits();
  return b_limit(lambda, alpha, lim.beta, lim.gamma);
}

EscapeBounds escape_bounds(double delta, double alpha, double epsilon) {
  if (!(delta > 0.0) || !(alpha > 0.0) || !(epsilon > 0.0)) {
    throw DomainError("escape_bounds requires positive delta, alpha and epsilon");
  }
  EscapeBounds out;
  out.gd_bound = static_cast<long>(std::ceil(std::abs(std::log(epsilon)) / (delta * alpha)));
  const double hb_rhs = std::log(2.0 / epsilon) / std::sqrt(3.0 * delta);
  out.hb_bound = std::max(0L, static_cast<long>(std::ceil(hb_rhs)) - 1);
  return out;
}

long predicted_escape_iters(double bar_b, double projection, double threshold) {
  if (!(bar_b > 0.0)) throw DomainError("predicted_escape_iters requires bar_b > 0");
  if (!(projection > 0.0) || !(threshold > 0.0)) {
    throw DomainError("predicted_escape_iters requires positive projection and threshold");
  }
  if (projection >= threshold) return 0;
  const double growth = std::log1p(bar_b);
  long k = static_cast<long>(std::ceil(std::log(threshold / projection) / growth));
  // Settle floating-point rounding against the defining inequality.
  auto reached = [&](long j) { return projection * std::exp(growth * static_cast<double>(j)) >= threshold; };
  while (k > 0 && reached(k - 1)) --k;
  while (!reached(k)) ++k;
  return k;
}

}  // namespace saddle
