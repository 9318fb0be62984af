#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace saddle {

/// SplitMix64: a counter-based generator. State advances by a fixed odd
/// increment and every output is a bijective mix of the counter, so the
/// stream for a given seed is identical on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream derived from (seed, index). Used to give every trial
  /// its own generator regardless of how trials are scheduled.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller; the spare value is cached.
  double normal();

  Eigen::VectorXd normal_vector(Eigen::Index n);

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t mix64(std::uint64_t z);

/// Uniform sample from the closed unit ball in R^n: a normalized Gaussian
/// direction scaled by U^(1/n).
Eigen::VectorXd uniform_in_ball(Rng& rng, Eigen::Index n);

/// Uniform sample from the unit sphere in R^n.
Eigen::VectorXd uniform_on_sphere(Rng& rng, Eigen::Index n);

}  // namespace saddle
