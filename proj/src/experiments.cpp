#include "saddle/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "saddle/errors.hpp"
#include "saddle/rates.hpp"
#include "saddle/rng.hpp"

namespace saddle {

namespace {

std::vector<double> coordinate_series(const IterationTrace& trace, int coord, long iters) {
  std::vector<double> out(static_cast<std::size_t>(iters) + 1, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    out[static_cast<std::size_t>(trace.steps[i])] = std::abs(trace.iterates[i][coord]);
  }
  return out;
}

}  // namespace

ToyFigure toy_figure(double delta, double alpha, double beta, const Vector& x0, long iters,
                     long thin) {
  if (thin < 1) throw DomainError("thin must be >= 1");
  if (x0.size() != 2) throw DomainError("toy start must be two-dimensional");
  const QuadraticOracle oracle(toy_problem(delta));
  ToyFigure fig;
  fig.delta = delta;
  fig.alpha = alpha;
  fig.beta = beta;
  fig.thin = thin;
  RunControl thinned;
  thinned.record_every = thin;
  fig.steepest = run_gradient_descent(oracle, alpha, x0, iters, thinned);
  fig.heavy_ball = run_heavy_ball(oracle, alpha, beta, x0, EqualToX0{}, iters, thinned);

  const Projector p2 = coordinate_projector(2, {1});
  RunControl full;
  full.record_values = false;
  fig.steepest_escape = escape_time(run_gradient_descent(oracle, alpha, x0, iters, full), p2, 1.0);
  fig.heavy_ball_escape =
      escape_time(run_heavy_ball(oracle, alpha, beta, x0, EqualToX0{}, iters, full), p2, 1.0);
  return fig;
}

NegspaceResult negspace_experiment(const NegspaceSpec& spec) {
  if (spec.iters < 1) throw DomainError("negspace experiment needs iters >= 1");
  QuadraticProblem problem = single_negative_problem(spec.n, spec.delta, spec.seed);
  Rng rng = Rng::stream(spec.seed, 1);
  Vector x0 = uniform_in_ball(rng, spec.n);
  NegspaceResult r(problem, x0);
  const double L = problem.lipschitz();
  const int last = spec.n - 1;
  const double lambda_n = problem.eigenvalue(last);

  r.gd_alpha = 1.0 / L;
  r.hb_alpha = 1.0 / L;
  r.hb_beta = spec.hb_beta.value_or(1.0 - r.hb_alpha * std::abs(lambda_n) - spec.hb_gamma_hat);
  r.ag_alpha = spec.ag_alpha_scale / L;
  r.bar_b = b_limit(lambda_n, r.ag_alpha, 1.0, 1.0).bar_b;
  r.initial_projection = std::abs(x0[last]);

  const QuadraticOracle oracle(problem);
  RunControl control;
  control.record_values = false;
  r.gd = coordinate_series(run_gradient_descent(oracle, r.gd_alpha, x0, spec.iters, control), last,
                           spec.iters);
  r.hb = coordinate_series(
      run_heavy_ball(oracle, r.hb_alpha, r.hb_beta, x0, EqualToX0{}, spec.iters, control), last,
      spec.iters);
  r.ag = coordinate_series(run_accelerated(oracle, r.ag_alpha, MomentumSchedule::nesterov(), x0,
                                           EqualToX0{}, spec.iters, control),
                           last, spec.iters);
  r.predictor.resize(static_cast<std::size_t>(spec.iters) + 1);
  for (long k = 0; k <= spec.iters; ++k) {
    r.predictor[static_cast<std::size_t>(k)] =
        r.initial_projection * std::pow(1.0 + r.bar_b, static_cast<double>(k));
  }
  return r;
}

const TableRow& TableResult::row(int n, double delta, const std::string& method) const {
  for (const auto& r : rows) {
    if (r.n == n && r.delta == delta && r.method == method) return r;
  }
  std::ostringstream msg;
  msg << "no table row for n=" << n << " delta=" << delta << " method=" << method;
  throw DomainError(msg.str());
}

TrialRecord run_table_trial(const TableSpec& spec, int n, double delta, int cell, int trial) {
  const auto stream_index = (static_cast<std::uint64_t>(cell) << 32) | static_cast<std::uint32_t>(trial);
  Rng rng = Rng::stream(spec.seed, stream_index);
  TrialRecord rec;
  rec.n = n;
  rec.delta = delta;
  rec.trial = trial;
  rec.problem_seed = rng.next_u64();
  const QuadraticProblem problem = random_problem(n, spec.p, delta, rec.problem_seed);
  const Vector x0 = uniform_in_ball(rng, n);
  const double threshold = spec.threshold.value_or(static_cast<double>(n));

  rec.lambda_min = problem.eigenvalue(n - 1);
  rec.lipschitz = problem.lipschitz();
  rec.initial_projection = problem.negative_projection_norm(x0);

  const QuadraticOracle oracle(problem);
  RunControl control;
  control.record_every = 0;
  control.record_values = false;
  control.stop = [&](long, const Vector& x) { return problem.negative_projection_norm(x) >= threshold; };

  const double sd_alpha = spec.sd_alpha_scale / rec.lipschitz;
  const IterationTrace sd = run_gradient_descent(oracle, sd_alpha, x0, spec.max_iters, control);
  rec.sd_iters = sd.steps_taken;
  rec.sd_censored = !sd.stopped;

  const double ag_alpha = spec.ag_alpha_scale / rec.lipschitz;
  const IterationTrace ag = run_accelerated(oracle, ag_alpha, MomentumSchedule::nesterov(), x0,
                                            EqualToX0{}, spec.max_iters, control);
  rec.ag_iters = ag.steps_taken;
  rec.ag_censored = !ag.stopped;

  rec.bar_b = b_limit(rec.lambda_min, ag_alpha, 1.0, 1.0).bar_b;
  rec.predictor_iters = predicted_escape_iters(rec.bar_b, rec.initial_projection, threshold);
  return rec;
}

TableResult divergence_table(const TableSpec& spec) {
  if (spec.trials < 1) throw DomainError("divergence table needs trials >= 1");
  if (spec.threshold && !(*spec.threshold > 0.0)) throw DomainError("threshold must be positive");

  struct Job {
    int n;
    double delta;
    int cell;
    int trial;
  };
  std::vector<Job> jobs;
  int cell = 0;
  for (int n : spec.ns) {
    for (double delta : spec.deltas) {
      for (int t = 0; t < spec.trials; ++t) jobs.push_back({n, delta, cell, t});
      ++cell;
    }
  }

  std::vector<TrialRecord> records(jobs.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < jobs.size(); i = cursor++) {
      const Job& j = jobs[i];
      records[i] = run_table_trial(spec, j.n, j.delta, j.cell, j.trial);
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  TableResult result;
  result.trials = std::move(records);
  std::size_t offset = 0;
  for (int n : spec.ns) {
    for (double delta : spec.deltas) {
      TableRow sd{n, delta, kSteepestDescent}, ag{n, delta, kAcceleratedGradient},
          pred{n, delta, kBbarRate};
      for (int t = 0; t < spec.trials; ++t) {
        const TrialRecord& r = result.trials[offset + static_cast<std::size_t>(t)];
        sd.avg_iters += static_cast<double>(r.sd_iters);
        ag.avg_iters += static_cast<double>(r.ag_iters);
        pred.avg_iters += static_cast<double>(r.predictor_iters);
        sd.max_iters = std::max(sd.max_iters, r.sd_iters);
        ag.max_iters = std::max(ag.max_iters, r.ag_iters);
        pred.max_iters = std::max(pred.max_iters, r.predictor_iters);
        sd.censored += r.sd_censored;
        ag.censored += r.ag_censored;
      }
      for (TableRow* row : {&sd, &ag, &pred}) {
        row->avg_iters /= static_cast<double>(spec.trials);
        if (row->censored > 0) {
          std::ostringstream msg;
          msg << row->censored << " " << row->method << " trial(s) at n=" << n << " delta=" << delta
              << " reached max_iters=" << spec.max_iters << " without escaping (censored)";
          result.warnings.push_back(msg.str());
        }
        result.rows.push_back(*row);
      }
      offset += static_cast<std::size_t>(spec.trials);
    }
  }
  return result;
}

}  // namespace saddle
