#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "saddle/problems.hpp"
#include "saddle/schedules.hpp"

namespace saddle {

/// The iterate preceding the start is a copy of the start.
struct EqualToX0 {};

/// The iterate preceding the start is x0 + epsilon * y, y with i.i.d. N(0,1)
/// entries drawn from seed.
struct Perturbed {
  double epsilon = 1e-6;
  std::uint64_t seed = 0;
};

using PreviousIteratePolicy = std::variant<EqualToX0, Perturbed>;

/// Resolves the policy into a concrete point. Throws ConfigError if epsilon <= 0.
Vector previous_iterate(const Vector& x0, const PreviousIteratePolicy& policy);

struct RunConfig {
  double alpha = 0.0;
  MomentumSchedule schedule;
  Vector x0;
  PreviousIteratePolicy previous = EqualToX0{};
  long max_iters = 0;
};

/// Controls what a run records and when it ends early.
struct RunControl {
  /// Record every m-th iterate (the start and the last iterate are always
  /// recorded). Zero records only those two.
  long record_every = 1;
  /// Evaluated on every iterate (including the start); returning true ends
  /// the run at that iterate.
  std::function<bool(long step, const Vector& x)> stop;
  /// A run whose iterate has any coordinate beyond this magnitude, or is
  /// nonfinite, ends with the divergence flag set.
  double divergence_cutoff = 1e100;
  /// Evaluate f and |grad f| for recorded iterates.
  bool record_values = true;
};

/// Iterates of one run, indexed by the number of updates performed:
/// step 0 is the starting point x0 and step k the point after k updates.
/// `previous` holds the extra iterate preceding the start (x^{-1} in
/// heavy-ball notation; Algorithm-style x^0 when the start is called x^1).
struct IterationTrace {
  Vector previous;
  std::vector<long> steps;
  std::vector<Vector> iterates;
  std::vector<double> values;
  std::vector<double> grad_norms;
  long steps_taken = 0;
  bool diverged = false;
  bool stopped = false;
  Vector final_iterate;

  std::size_t size() const { return iterates.size(); }
  /// Recorded iterate at a given step; throws DomainError if not recorded.
  const Vector& at(long step) const;
  /// Coordinate i of every recorded iterate.
  std::vector<double> coordinate(int i) const;
};

/// x^{k+1} = x^k - alpha grad f(x^k).
IterationTrace run_gradient_descent(const GradientOracle& oracle, double alpha, const Vector& x0,
                                    long max_iters, const RunControl& control = {});

/// x^{k+1} = x^k - alpha grad f(x^k) + beta (x^k - x^{k-1}).
IterationTrace run_heavy_ball(const GradientOracle& oracle, double alpha, double beta,
                              const Vector& x0, const PreviousIteratePolicy& previous,
                              long max_iters, const RunControl& control = {});

/// General accelerated framework:
///   y^k     = x^k + gamma_k (x^k - x^{k-1})
///   x^{k+1} = x^k + beta_k (x^k - x^{k-1}) - alpha grad f(y^k)
/// with (beta_k, gamma_k) drawn from the schedule for k = 1, 2, ...
IterationTrace run_accelerated(const GradientOracle& oracle, double alpha,
                               const MomentumSchedule& schedule, const Vector& x0,
                               const PreviousIteratePolicy& previous, long max_iters,
                               const RunControl& control = {});

IterationTrace run_accelerated(const GradientOracle& oracle, const RunConfig& config,
                               const RunControl& control = {});

/// Rows of the returned matrix form an orthonormal basis of a subspace; the
/// projection norm of x is |P x|.
using Projector = Matrix;

Projector coordinate_projector(int n, const std::vector<int>& coordinates);
/// Basis of the span of eigenvectors with negative eigenvalue.
Projector negative_eigenspace_projector(const QuadraticProblem& problem);

/// Smallest recorded step with |P x^k| >= threshold, or nullopt.
/// Throws DomainError if threshold <= 0.
std::optional<long> escape_time(const IterationTrace& trace, const Projector& projector,
                                double threshold);

}  // namespace saddle
