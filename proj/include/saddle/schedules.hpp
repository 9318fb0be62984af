#pragma once

#include <string>
#include <variant>
#include <vector>

namespace saddle {

/// Extrapolation weights for one iteration of the accelerated framework:
/// beta weights the momentum step, gamma shifts the gradient evaluation point.
struct MomentumParams {
  double beta = 0.0;
  double gamma = 0.0;
};

namespace schedule {

struct Constant {
  double beta = 0.0;
  double gamma = 0.0;
};

/// Heavy-ball constants for a strongly convex quadratic with spectrum in [m, L].
struct Polyak {
  double m = 0.0;
  double L = 0.0;
};

/// beta_k = gamma_k = (t_{k-1} - 1) / t_k.
struct NesterovTk {};

/// beta_k = gamma_k = (k - 1) / (k + eta + 1).
struct Attouch {
  double eta = 0.0;
};

/// Heavy-ball family for the toy saddle: gamma_k = 0, beta = 1 - alpha*delta - gamma_hat.
/// gamma_hat is the family's offset parameter, unrelated to the gamma_k weight.
struct ToyFamily {
  double alpha = 0.0;
  double delta = 0.0;
  double gamma_hat = 0.0;
};

}  // namespace schedule

class MomentumSchedule {
 public:
  using Variant = std::variant<schedule::Constant, schedule::Polyak, schedule::NesterovTk,
                               schedule::Attouch, schedule::ToyFamily>;

  MomentumSchedule() : variant_(schedule::Constant{}) {}
  MomentumSchedule(Variant v) : variant_(std::move(v)) {}  // NOLINT(implicit)

  static MomentumSchedule constant(double beta, double gamma) { return {schedule::Constant{beta, gamma}}; }
  static MomentumSchedule polyak(double m, double L) { return {schedule::Polyak{m, L}}; }
  static MomentumSchedule nesterov() { return {schedule::NesterovTk{}}; }
  static MomentumSchedule attouch(double eta) { return {schedule::Attouch{eta}}; }
  static MomentumSchedule toy(double alpha, double delta, double gamma_hat) {
    return {schedule::ToyFamily{alpha, delta, gamma_hat}};
  }

  const Variant& variant() const { return variant_; }

  /// (beta_k, gamma_k) for k >= 1. O(k) for NesterovTk; use ScheduleStream
  /// when walking k sequentially. Throws ConfigError when a value leaves [0, 1].
  MomentumParams at(long k) const;

  /// Limits (beta_bar, gamma_bar) as k -> infinity.
  MomentumParams limits() const;

  /// True when both sequences are nondecreasing in k.
  bool nondecreasing() const;

  /// Short label, e.g. "nesterov", "attouch:2".
  std::string label() const;

 private:
  Variant variant_;
};

/// Sequential generator of (beta_k, gamma_k), k = 1, 2, ... in O(1) per step.
class ScheduleStream {
 public:
  explicit ScheduleStream(MomentumSchedule schedule);
  MomentumParams next();
  long k() const { return k_; }

 private:
  MomentumSchedule schedule_;
  long k_ = 0;
  double t_prev_ = 1.0;  // t_{k-1}
  MomentumParams fixed_{};
  bool is_fixed_ = false;
};

/// One step of t_k = (sqrt(4 t_{k-1}^2 + 1) + 1) / 2.
double next_t(double t_prev);

/// t_0 .. t_K with t_0 = 1.
std::vector<double> nesterov_t(long K);

/// (beta_k, gamma_k) for k >= 1; throws DomainError for k < 1.
MomentumParams schedule_params(const MomentumSchedule& schedule, long k);

struct PolyakParams {
  double alpha;
  double beta;
};

/// alpha = 4 / (sqrt L + sqrt m)^2, beta = (sqrt L - sqrt m) / (sqrt L + sqrt m).
/// Throws DomainError unless 0 < m <= L.
PolyakParams polyak_params(double m, double L);

struct TkReport {
  long K = 0;
  double identity_max_err = 0.0;  // max_k |t_k^2 - t_k - t_{k-1}^2| / t_k^2
  bool identity_ok = false;
  bool bound_ok = false;          // t_k >= (k+1)/2 for all k
  bool ratio_monotone = false;    // (t_{k-1}-1)/t_k nondecreasing and nonnegative
  bool ratio_bounds_ok = false;   // 1 - 2/(t_{k-1}+1) <= ratio <= 1
  double ratio_gap = 0.0;         // 1 - ratio at k = K
  double ratio_final = 0.0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the algebraic properties of the t_k sequence up to K (K >= 2).
/// Failures are reported, never thrown.
TkReport verify_tk_properties(long K, double identity_tol = 1e-9);

}  // namespace saddle
