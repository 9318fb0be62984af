#include "saddle/rng.hpp"

#include <cmath>
#include <numbers>

namespace saddle {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix64(mix64(seed) ^ mix64(index * kGolden + 0x632be59bd9b4e019ULL)));
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - u lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Eigen::VectorXd Rng::normal_vector(Eigen::Index n) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Eigen::VectorXd uniform_on_sphere(Rng& rng, Eigen::Index n) {
  Eigen::VectorXd v = rng.normal_vector(n);
  double norm = v.norm();
  while (norm == 0.0) {
    v = rng.normal_vector(n);
    norm = v.norm();
  }
  return v / norm;
}

Eigen::VectorXd uniform_in_ball(Rng& rng, Eigen::Index n) {
  Eigen::VectorXd dir = uniform_on_sphere(rng, n);
  const double radius = std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
  return radius * dir;
}

}  // namespace saddle
