#include "saddle/optimizers.hpp"

#include <cmath>
#include <string>

#include "saddle/errors.hpp"
#include "saddle/rng.hpp"

namespace saddle {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("stepsize alpha must be positive");
}

void check_start(const GradientOracle& oracle, const Vector& x0) {
  if (x0.size() != oracle.dim()) {
    throw DomainError("starting point has dimension " + std::to_string(x0.size()) +
                      ", oracle expects " + std::to_string(oracle.dim()));
  }
}

// Shared bookkeeping for the three iteration loops.
class Recorder {
 public:
  Recorder(const GradientOracle& oracle, const RunControl& control, IterationTrace& trace)
      : oracle_(oracle), control_(control), trace_(trace) {}

  // Returns false when the run must end at this iterate.
  bool visit(long step, const Vector& x, bool last) {
    const bool finite = x.allFinite();
    const bool blown = finite && x.cwiseAbs().maxCoeff() > control_.divergence_cutoff;
    const bool stop = finite && control_.stop && control_.stop(step, x);
    trace_.steps_taken = step;
    if (!finite) {
      trace_.diverged = true;
      return false;
    }
    trace_.final_iterate = x;
    const bool on_grid = control_.record_every > 0 && step % control_.record_every == 0;
    if (step == 0 || on_grid || last || blown || stop) record(step, x);
    if (blown) trace_.diverged = true;
    if (stop) trace_.stopped = true;
    return !(blown || stop);
  }

 private:
  void record(long step, const Vector& x) {
    if (!trace_.steps.empty() && trace_.steps.back() == step) return;
    trace_.steps.push_back(step);
    trace_.iterates.push_back(x);
    if (control_.record_values) {
      const Evaluation e = oracle_.evaluate(x);
      trace_.values.push_back(e.value);
      trace_.grad_norms.push_back(e.gradient.norm());
    }
  }

  const GradientOracle& oracle_;
  const RunControl& control_;
  IterationTrace& trace_;
};

}  // namespace

Vector previous_iterate(const Vector& x0, const PreviousIteratePolicy& policy) {
  if (const auto* p = std::get_if<Perturbed>(&policy)) {
    if (!(p->epsilon > 0.0)) throw ConfigError("perturbation epsilon must be positive");
    Rng rng(p->seed);
    return x0 + p->epsilon * rng.normal_vector(x0.size());
  }
  return x0;
}

const Vector& IterationTrace::at(long step) const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == step) return iterates[i];
  }
  throw DomainError("step " + std::to_string(step) + " was not recorded");
}

std::vector<double> IterationTrace::coordinate(int i) const {
  std::vector<double> out;
  out.reserve(iterates.size());
  for (const auto& x : iterates) out.push_back(x[i]);
  return out;
}

IterationTrace run_gradient_descent(const GradientOracle& oracle, double alpha, const Vector& x0,
                                    long max_iters, const RunControl& control) {
  check_alpha(alpha);
  check_start(oracle, x0);
  IterationTrace trace;
  trace.previous = x0;
  Recorder rec(oracle, control, trace);
  Vector x = x0;
  if (!rec.visit(0, x, max_iters == 0)) return trace;
  for (long k = 1; k <= max_iters; ++k) {
    x -= alpha * oracle.gradient(x);
    if (!rec.visit(k, x, k == max_iters)) break;
  }
  return trace;
}

IterationTrace run_heavy_ball(const GradientOracle& oracle, double alpha, double beta,
                              const Vector& x0, const PreviousIteratePolicy& previous,
                              long max_iters, const RunControl& control) {
  check_alpha(alpha);
  check_start(oracle, x0);
  if (!(beta >= 0.0 && beta < 1.0)) throw ConfigError("heavy-ball beta must lie in [0, 1)");
  IterationTrace trace;
  trace.previous = previous_iterate(x0, previous);
  Recorder rec(oracle, control, trace);
  Vector x = x0;
  Vector x_prev = trace.previous;
  if (!rec.visit(0, x, max_iters == 0)) return trace;
  for (long k = 1; k <= max_iters; ++k) {
    Vector next = x - alpha * oracle.gradient(x) + beta * (x - x_prev);
    x_prev.swap(x);
    x.swap(next);
    if (!rec.visit(k, x, k == max_iters)) break;
  }
  return trace;
}

IterationTrace run_accelerated(const GradientOracle& oracle, double alpha,
                               const MomentumSchedule& schedule, const Vector& x0,
                               const PreviousIteratePolicy& previous, long max_iters,
                               const RunControl& control) {
  check_alpha(alpha);
  check_start(oracle, x0);
  IterationTrace trace;
  trace.previous = previous_iterate(x0, previous);
  ScheduleStream params(schedule);
  Recorder rec(oracle, control, trace);
  Vector x = x0;
  Vector x_prev = trace.previous;
  if (!rec.visit(0, x, max_iters == 0)) return trace;
  for (long k = 1; k <= max_iters; ++k) {
    const MomentumParams p = params.next();
    const Vector diff = x - x_prev;
    const Vector y = x + p.gamma * diff;
    Vector next = x + p.beta * diff - alpha * oracle.gradient(y);
    x_prev.swap(x);
    x.swap(next);
    if (!rec.visit(k, x, k == max_iters)) break;
  }
  return trace;
}

IterationTrace run_accelerated(const GradientOracle& oracle, const RunConfig& config,
                               const RunControl& control) {
  return run_accelerated(oracle, config.alpha, config.schedule, config.x0, config.previous,
                         config.max_iters, control);
}

Projector coordinate_projector(int n, const std::vector<int>& coordinates) {
  Projector p = Projector::Zero(static_cast<Eigen::Index>(coordinates.size()), n);
  for (std::size_t r = 0; r < coordinates.size(); ++r) {
    const int c = coordinates[r];
    if (c < 0 || c >= n) throw DomainError("projector coordinate out of range");
    p(static_cast<Eigen::Index>(r), c) = 1.0;
  }
  return p;
}

Projector negative_eigenspace_projector(const QuadraticProblem& problem) {
  const int n = problem.dim();
  const int p = problem.negative_count();
  Projector out(p, n);
  for (int r = 0; r < p; ++r) out.row(r) = problem.eigenvector(n - p + r).transpose();
  return out;
}

std::optional<long> escape_time(const IterationTrace& trace, const Projector& projector,
                                double threshold) {
  if (!(threshold > 0.0)) throw DomainError("escape threshold must be positive");
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    if ((projector * trace.iterates[i]).norm() >= threshold) return trace.steps[i];
  }
  return std::nullopt;
}

}  // namespace saddle
