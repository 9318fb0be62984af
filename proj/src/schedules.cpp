#include "saddle/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "saddle/errors.hpp"

namespace saddle {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

MomentumParams checked(MomentumParams p, long k, const std::string& label) {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(p.beta) || !in_unit(p.gamma)) {
    std::ostringstream msg;
    msg << "schedule " << label << " produced (beta, gamma) = (" << p.beta << ", " << p.gamma
        << ") at k=" << k << ", outside [0, 1]";
    throw ConfigError(msg.str());
  }
  return p;
}

double polyak_beta(double m, double L) {
  const double sl = std::sqrt(L);
  const double sm = std::sqrt(m);
  return (sl - sm) / (sl + sm);
}

// Value of a schedule whose parameters do not depend on k.
std::optional<MomentumParams> fixed_params(const MomentumSchedule::Variant& v) {
  return std::visit(
      overloaded{
          [](const schedule::Constant& c) -> std::optional<MomentumParams> {
            return MomentumParams{c.beta, c.gamma};
          },
          [](const schedule::Polyak& p) -> std::optional<MomentumParams> {
            if (!(p.m > 0.0) || p.L < p.m) throw ConfigError("polyak schedule requires 0 < m <= L");
            return MomentumParams{polyak_beta(p.m, p.L), 0.0};
          },
          [](const schedule::ToyFamily& t) -> std::optional<MomentumParams> {
            return MomentumParams{1.0 - t.alpha * t.delta - t.gamma_hat, 0.0};
          },
          [](const schedule::NesterovTk&) -> std::optional<MomentumParams> { return std::nullopt; },
          [](const schedule::Attouch&) -> std::optional<MomentumParams> { return std::nullopt; },
      },
      v);
}

double attouch_value(double eta, long k) {
  const double kd = static_cast<double>(k);
  return (kd - 1.0) / (kd + eta + 1.0);
}

}  // namespace

double next_t(double t_prev) { return (std::sqrt(4.0 * t_prev * t_prev + 1.0) + 1.0) / 2.0; }

std::vector<double> nesterov_t(long K) {
  if (K < 0) throw DomainError("nesterov_t requires K >= 0");
  std::vector<double> t(static_cast<std::size_t>(K) + 1);
  t[0] = 1.0;
  for (std::size_t k = 1; k < t.size(); ++k) t[k] = next_t(t[k - 1]);
  return t;
}

MomentumParams MomentumSchedule::at(long k) const {
  if (k < 1) throw DomainError("schedule index k must be >= 1");
  if (auto fixed = fixed_params(variant_)) return checked(*fixed, k, label());
  if (const auto* a = std::get_if<schedule::Attouch>(&variant_)) {
    const double v = attouch_value(a->eta, k);
    return checked({v, v}, k, label());
  }
  double t_prev = 1.0;
  for (long j = 1; j < k; ++j) t_prev = next_t(t_prev);
  const double v = (t_prev - 1.0) / next_t(t_prev);
  return checked({v, v}, k, label());
}

MomentumParams MomentumSchedule::limits() const {
  if (auto fixed = fixed_params(variant_)) return *fixed;
  return {1.0, 1.0};
}

bool MomentumSchedule::nondecreasing() const {
  if (const auto* a = std::get_if<schedule::Attouch>(&variant_)) return a->eta > -2.0;
  return true;
}

std::string MomentumSchedule::label() const {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const schedule::Constant& c) { out << "constant:" << c.beta << "," << c.gamma; },
                 [&](const schedule::Polyak& p) { out << "polyak:" << p.m << "," << p.L; },
                 [&](const schedule::NesterovTk&) { out << "nesterov"; },
                 [&](const schedule::Attouch& a) { out << "attouch:" << a.eta; },
                 [&](const schedule::ToyFamily& t) {
                   out << "toy:" << t.alpha << "," << t.delta << "," << t.gamma_hat;
                 },
             },
             variant_);
  return out.str();
}

ScheduleStream::ScheduleStream(MomentumSchedule schedule) : schedule_(std::move(schedule)) {
  if (auto fixed = fixed_params(schedule_.variant())) {
    fixed_ = checked(*fixed, 1, schedule_.label());
    is_fixed_ = true;
  }
}

MomentumParams ScheduleStream::next() {
  ++k_;
  if (is_fixed_) return fixed_;
  if (const auto* a = std::get_if<schedule::Attouch>(&schedule_.variant())) {
    const double v = attouch_value(a->eta, k_);
    return checked({v, v}, k_, schedule_.label());
  }
  const double t_k = next_t(t_prev_);
  const double v = (t_prev_ - 1.0) / t_k;
  t_prev_ = t_k;
  return checked({v, v}, k_, schedule_.label());
}

MomentumParams schedule_params(const MomentumSchedule& schedule, long k) { return schedule.at(k); }

PolyakParams polyak_params(double m, double L) {
  if (!(m > 0.0)) throw DomainError("polyak_params requires m > 0");
  if (!(L >= m)) throw DomainError("polyak_params requires L >= m");
  const double s = std::sqrt(L) + std::sqrt(m);
  return {4.0 / (s * s), polyak_beta(m, L)};
}

TkReport verify_tk_properties(long K, double identity_tol) {
  if (K < 2) throw DomainError("verify_tk_properties requires K >= 2");
  TkReport report;
  report.K = K;
  const std::vector<double> t = nesterov_t(K);

  long identity_bad = -1, bound_bad = -1, mono_bad = -1, bounds_bad = -1;
  double prev_ratio = -1.0;
  for (long k = 1; k <= K; ++k) {
    const double tk = t[static_cast<std::size_t>(k)];
    const double tp = t[static_cast<std::size_t>(k - 1)];
    const double err = std::abs(tk * tk - tk - tp * tp) / (tk * tk);
    report.identity_max_err = std::max(report.identity_max_err, err);
    if (err > identity_tol && identity_bad < 0) identity_bad = k;
    if (tk < (static_cast<double>(k) + 1.0) / 2.0 && bound_bad < 0) bound_bad = k;
    const double ratio = (tp - 1.0) / tk;
    if ((ratio < 0.0 || ratio < prev_ratio) && mono_bad < 0) mono_bad = k;
    const double lower = 1.0 - 2.0 / (tp + 1.0);
    if ((ratio < lower || ratio > 1.0) && bounds_bad < 0) bounds_bad = k;
    prev_ratio = ratio;
  }
  report.ratio_final = prev_ratio;
  report.ratio_gap = 1.0 - prev_ratio;
  report.identity_ok = identity_bad < 0;
  report.bound_ok = bound_bad < 0;
  report.ratio_monotone = mono_bad < 0;
  report.ratio_bounds_ok = bounds_bad < 0;

  auto note = [&](long k, const char* what) {
    if (k >= 0) report.violations.push_back(std::string(what) + " fails first at k=" + std::to_string(k));
  };
  note(identity_bad, "t_k^2 - t_k = t_{k-1}^2");
  note(bound_bad, "t_k >= (k+1)/2");
  note(mono_bad, "(t_{k-1}-1)/t_k nondecreasing and nonnegative");
  note(bounds_bad, "1 - 2/(t_{k-1}+1) <= (t_{k-1}-1)/t_k <= 1");
  return report;
}

}  // namespace saddle
