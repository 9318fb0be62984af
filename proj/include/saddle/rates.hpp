#pragma once

#include <vector>

#include "saddle/schedules.hpp"

namespace saddle {

/// Per-iteration growth factors of a negative-curvature coordinate under the
/// accelerated framework: x_i^{k+1} = x_i^0 prod_{m=0}^{k} (1 + b_m).
struct RateSequence {
  double lambda = 0.0;
  double alpha = 0.0;
  MomentumSchedule schedule;
  std::vector<double> values;  // b_0 .. b_K, b_0 = 0

  long K() const { return static_cast<long>(values.size()) - 1; }
  double final() const { return values.back(); }
};

/// b_0 = 0, b_k = (beta_k + gamma_k a)(1 - 1/(1 + b_{k-1})) + a with a = alpha |lambda|.
/// Throws DomainError unless lambda < 0, alpha > 0 and K >= 1.
RateSequence b_sequence(double lambda, double alpha, const MomentumSchedule& schedule, long K);

/// x0_i * prod_{m=0}^{k} (1 + b_m): the coordinate after k updates.
double product_reconstruction(double x0_i, const RateSequence& rate, long k);

struct RateLimit {
  double bar_b = 0.0;
  double lambda = 0.0;
  double alpha = 0.0;
  double beta_bar = 0.0;
  double gamma_bar = 0.0;

  /// a + (1 + a + beta_bar + gamma_bar a) b - 2b - b^2, zero at the limit.
  double residual() const;
};

/// Nonnegative root of b^2 - (beta_bar - 1 + a(1 + gamma_bar)) b - a = 0.
RateLimit b_limit(double lambda, double alpha, double beta_bar, double gamma_bar);

/// Limit rate for a schedule, using its limiting (beta_bar, gamma_bar).
RateLimit b_limit(double lambda, double alpha, const MomentumSchedule& schedule);

struct EscapeBounds {
  long gd_bound = 0;  // ceil(|log eps| / (delta alpha))
  long hb_bound = 0;  // smallest k with k + 1 >= log(2/eps) / sqrt(3 delta)
};

/// Closed-form iteration counts on the toy saddle for leaving |x2| < 1 from
/// x2 = eps. The heavy-ball count refers to alpha = 3, beta = 1 - 3 delta.
EscapeBounds escape_bounds(double delta, double alpha, double epsilon);

/// Smallest k >= 0 with projection * (1 + bar_b)^k >= threshold.
/// Throws DomainError unless bar_b > 0, projection > 0 and threshold > 0.
long predicted_escape_iters(double bar_b, double projection, double threshold);

}  // namespace saddle
