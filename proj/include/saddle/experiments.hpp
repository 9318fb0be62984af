#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "saddle/optimizers.hpp"
#include "saddle/problems.hpp"

namespace saddle {

// ---------------------------------------------------------------------------
// Toy saddle trajectories

struct ToyFigure {
  double delta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  long thin = 1;
  IterationTrace steepest;    // recorded every `thin` steps
  IterationTrace heavy_ball;  // recorded every `thin` steps
  /// First step with |x2| >= 1 at full resolution.
  std::optional<long> steepest_escape;
  std::optional<long> heavy_ball_escape;
};

/// Steepest descent and heavy-ball (x^{-1} = x^0) on f = 1/2 (x1^2 - delta x2^2)
/// from a shared start.
ToyFigure toy_figure(double delta, double alpha, double beta, const Vector& x0, long iters,
                     long thin);

// ---------------------------------------------------------------------------
// Growth along a single negative eigenvector

struct NegspaceSpec {
  int n = 100;
  double delta = 1e-2;
  std::uint64_t seed = 0;
  long iters = 400;
  /// Heavy-ball beta = 1 - alpha*delta - gamma_hat unless beta is given.
  double hb_gamma_hat = 1e-3;
  std::optional<double> hb_beta;
  double ag_alpha_scale = 0.99;
};

struct NegspaceResult {
  NegspaceResult(QuadraticProblem p, Vector start) : problem(std::move(p)), x0(std::move(start)) {}

  QuadraticProblem problem;
  Vector x0;
  double gd_alpha = 0.0;
  double hb_alpha = 0.0;
  double hb_beta = 0.0;
  double ag_alpha = 0.0;
  double bar_b = 0.0;
  double initial_projection = 0.0;
  /// |x_n^k| for k = 0..iters; NaN after a run diverges past the cutoff.
  std::vector<double> gd;
  std::vector<double> hb;
  std::vector<double> ag;
  std::vector<double> predictor;
};

/// One random problem with n-1 eigenvalues in [0,1] and lambda_n = -delta,
/// x0 uniform in the unit ball. GD and heavy-ball use alpha = 1/L, accelerated
/// gradient uses alpha = 0.99/L with the Nesterov schedule, and the predictor
/// is |x_n^0| (1 + bar_b)^k.
NegspaceResult negspace_experiment(const NegspaceSpec& spec);

// ---------------------------------------------------------------------------
// Divergence table

struct TableSpec {
  std::vector<int> ns{100, 1000};
  std::vector<double> deltas{1e-2, 1e-3};
  int trials = 100;
  int p = 5;
  std::uint64_t seed = 0;
  long max_iters = 1'000'000;
  double sd_alpha_scale = 1.0;
  double ag_alpha_scale = 0.99;
  /// Escape threshold on the negative-eigenspace projection; n when unset.
  std::optional<double> threshold;
  /// Worker threads; 0 uses hardware concurrency.
  unsigned threads = 0;
};

struct TrialRecord {
  int n = 0;
  double delta = 0.0;
  int trial = 0;
  std::uint64_t problem_seed = 0;
  double lambda_min = 0.0;
  double lipschitz = 0.0;
  double initial_projection = 0.0;
  double bar_b = 0.0;
  long sd_iters = 0;
  long ag_iters = 0;
  long predictor_iters = 0;
  bool sd_censored = false;
  bool ag_censored = false;
};

struct TableRow {
  int n = 0;
  double delta = 0.0;
  std::string method;  // "steepest_descent", "accelerated_gradient", "bbar_rate"
  double avg_iters = 0.0;
  long max_iters = 0;
  int censored = 0;
};

struct TableResult {
  std::vector<TableRow> rows;
  std::vector<TrialRecord> trials;
  std::vector<std::string> warnings;

  /// Throws DomainError when no such row exists.
  const TableRow& row(int n, double delta, const std::string& method) const;
};

inline constexpr const char* kSteepestDescent = "steepest_descent";
inline constexpr const char* kAcceleratedGradient = "accelerated_gradient";
inline constexpr const char* kBbarRate = "bbar_rate";

/// Runs every (n, delta, trial) independently; trial t of cell c draws from
/// Rng::stream(seed, c << 32 | t), so results do not depend on scheduling.
TableResult divergence_table(const TableSpec& spec);

/// One table trial, exposed for testing.
TrialRecord run_table_trial(const TableSpec& spec, int n, double delta, int cell, int trial);

}  // namespace saddle
