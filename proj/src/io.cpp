#include "saddle/io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "saddle/errors.hpp"

namespace saddle::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json problem_to_json(const QuadraticProblem& problem) {
  Json j;
  j["n"] = problem.dim();
  j["eigenvalues"] = std::vector<double>(problem.eigenvalues().begin(), problem.eigenvalues().end());
  if (problem.seed()) j["seed"] = *problem.seed();
  if (problem.basis_seed()) {
    j["basis_seed"] = *problem.basis_seed();
  } else if (problem.has_basis()) {
    const Matrix V = problem.basis();
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < V.rows(); ++i) {
      rows.push_back(std::vector<double>(V.row(i).begin(), V.row(i).end()));
    }
    j["basis"] = std::move(rows);
  }
  return j;
}

QuadraticProblem problem_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto eigs = j.at("eigenvalues").get<std::vector<double>>();
    if (static_cast<int>(eigs.size()) != n) throw DomainError("problem JSON: n does not match eigenvalue count");
    std::optional<std::uint64_t> seed, basis_seed;
    if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
    if (j.contains("basis_seed")) {
      basis_seed = j["basis_seed"].get<std::uint64_t>();
      return QuadraticProblem(std::move(eigs), random_orthogonal(n, *basis_seed)).with_provenance(seed, basis_seed);
    }
    if (j.contains("basis")) {
      Matrix V(n, n);
      const auto& rows = j["basis"];
      if (static_cast<int>(rows.size()) != n) throw DomainError("problem JSON: basis has wrong row count");
      for (int r = 0; r < n; ++r) {
        auto row = rows[static_cast<std::size_t>(r)].get<std::vector<double>>();
        if (static_cast<int>(row.size()) != n) throw DomainError("problem JSON: basis row has wrong length");
        for (int c = 0; c < n; ++c) V(r, c) = row[static_cast<std::size_t>(c)];
      }
      return QuadraticProblem(std::move(eigs), std::move(V)).with_provenance(seed, std::nullopt);
    }
    return QuadraticProblem(std::move(eigs)).with_provenance(seed, std::nullopt);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("problem JSON: ") + e.what());
  }
}

Json schedule_to_json(const MomentumSchedule& schedule) {
  return std::visit(
      overloaded{
          [](const schedule::NesterovTk&) { return Json{{"kind", "nesterov"}}; },
          [](const schedule::Attouch& a) { return Json{{"kind", "attouch"}, {"eta", a.eta}}; },
          [](const schedule::Constant& c) {
            return Json{{"kind", "constant"}, {"beta", c.beta}, {"gamma", c.gamma}};
          },
          [](const schedule::Polyak& p) { return Json{{"kind", "polyak"}, {"m", p.m}, {"L", p.L}}; },
          [](const schedule::ToyFamily& t) {
            return Json{{"kind", "toy"}, {"alpha", t.alpha}, {"delta", t.delta}, {"gamma_hat", t.gamma_hat}};
          },
      },
      schedule.variant());
}

MomentumSchedule schedule_from_json(const Json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "nesterov") return MomentumSchedule::nesterov();
    if (kind == "attouch") return MomentumSchedule::attouch(j.at("eta").get<double>());
    if (kind == "constant") return MomentumSchedule::constant(j.at("beta").get<double>(), j.at("gamma").get<double>());
    if (kind == "polyak") return MomentumSchedule::polyak(j.at("m").get<double>(), j.at("L").get<double>());
    if (kind == "toy") {
      return MomentumSchedule::toy(j.at("alpha").get<double>(), j.at("delta").get<double>(),
                                   j.at("gamma_hat").get<double>());
    }
    throw DomainError("unknown schedule kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("schedule JSON: ") + e.what());
  }
}

MomentumSchedule parse_schedule(const std::string& text, double alpha, double delta, double gamma_hat) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::vector<double> args =
      colon == std::string::npos ? std::vector<double>{} : parse_numbers(text.substr(colon + 1));
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("schedule '" + kind + "' takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (kind == "nesterov") {
    expect(0);
    return MomentumSchedule::nesterov();
  }
  if (kind == "attouch") {
    expect(1);
    return MomentumSchedule::attouch(args[0]);
  }
  if (kind == "constant") {
    expect(2);
    return MomentumSchedule::constant(args[0], args[1]);
  }
  if (kind == "polyak") {
    expect(2);
    return MomentumSchedule::polyak(args[0], args[1]);
  }
  if (kind == "toy") {
    if (args.empty()) return MomentumSchedule::toy(alpha, delta, gamma_hat);
    expect(3);
    return MomentumSchedule::toy(args[0], args[1], args[2]);
  }
  throw std::invalid_argument("unknown schedule '" + text + "'");
}

Json eigenpair_to_json(const EigenPair& pair) {
  Json j;
  j["lambda"] = pair.lambda;
  j["mu_hi"] = complex_json(pair.mu_hi);
  j["mu_lo"] = complex_json(pair.mu_lo);
  j["class"] = to_string(classify_block(pair));
  return j;
}

Json spectrum_to_json(const SpectrumClassification& spectrum) {
  Json j;
  j["stable_dim"] = spectrum.stable_dim;
  j["unstable_dim"] = spectrum.unstable_dim;
  Json records = Json::array();
  for (const auto& pair : spectrum.blocks) records.push_back(eigenpair_to_json(pair));
  j["eigenvalues"] = std::move(records);
  return j;
}

Json rate_report(const RateSequence& seq, const RateLimit& limit, long predicted_escape_iters) {
  Json j;
  j["lambda"] = seq.lambda;
  j["alpha"] = seq.alpha;
  j["schedule"] = schedule_to_json(seq.schedule);
  j["b_final"] = seq.final();
  j["b_limit"] = limit.bar_b;
  j["predicted_escape_iters"] = predicted_escape_iters;
  return j;
}

Json tk_report_to_json(const TkReport& report) {
  Json j;
  j["K"] = report.K;
  j["identity_max_err"] = report.identity_max_err;
  j["identity_ok"] = report.identity_ok;
  j["bound_ok"] = report.bound_ok;
  j["ratio_monotone"] = report.ratio_monotone;
  j["ratio_bounds_ok"] = report.ratio_bounds_ok;
  j["ratio_final"] = report.ratio_final;
  j["ratio_gap"] = report.ratio_gap;
  j["ok"] = report.ok();
  j["violations"] = report.violations;
  return j;
}

void write_trace_csv(std::ostream& out, const IterationTrace& trace, long thin, const Projector* projector) {
  if (thin < 1) throw DomainError("thin must be >= 1");
  const auto width = projector ? projector->rows() : (trace.iterates.empty() ? 0 : trace.iterates.front().size());
  out << "iter";
  for (Eigen::Index c = 0; c < width; ++c) out << (projector ? ",proj_" : ",x") << (c + 1);
  const bool values = trace.values.size() == trace.iterates.size();
  if (values) out << ",f,grad_norm";
  out << "\n";
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    const long step = trace.steps[i];
    if (step % thin != 0 && i + 1 != trace.iterates.size()) continue;
    const Vector row = projector ? Vector(*projector * trace.iterates[i]) : trace.iterates[i];
    out << step;
    for (Eigen::Index c = 0; c < row.size(); ++c) out << "," << csv_number(row[c]);
    if (values) out << "," << csv_number(trace.values[i]) << "," << csv_number(trace.grad_norms[i]);
    out << "\n";
  }
}

void write_toy_figure_csv(std::ostream& out, const ToyFigure& fig) {
  out << "method,iter,x1,x2\n";
  auto block = [&](const char* name, const IterationTrace& trace) {
    for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
      out << name << "," << trace.steps[i] << "," << csv_number(trace.iterates[i][0]) << ","
          << csv_number(trace.iterates[i][1]) << "\n";
    }
  };
  block("steepest_descent", fig.steepest);
  block("heavy_ball", fig.heavy_ball);
}

void write_negspace_csv(std::ostream& out, const NegspaceResult& r, long thin) {
  if (thin < 1) throw DomainError("thin must be >= 1");
  out << "iter,gd,heavy_ball,accelerated,predictor\n";
  const std::size_t len = r.predictor.size();
  for (std::size_t k = 0; k < len; ++k) {
    if (k % static_cast<std::size_t>(thin) != 0 && k + 1 != len) continue;
    out << k << "," << csv_number(r.gd[k]) << "," << csv_number(r.hb[k]) << "," << csv_number(r.ag[k])
        << "," << csv_number(r.predictor[k]) << "\n";
  }
}

void write_table_csv(std::ostream& out, const TableResult& table) {
  out << "record,n,delta,trial,problem_seed,lambda_min,initial_projection,bar_b,"
         "sd_iters,ag_iters,bbar_iters,sd_censored,ag_censored\n";
  for (const auto& t : table.trials) {
    out << "trial," << t.n << "," << csv_number(t.delta) << "," << t.trial << "," << t.problem_seed << ","
        << csv_number(t.lambda_min) << "," << csv_number(t.initial_projection) << "," << csv_number(t.bar_b)
        << "," << t.sd_iters << "," << t.ag_iters << "," << t.predictor_iters << "," << t.sd_censored << ","
        << t.ag_censored << "\n";
  }
  // Rows come in (steepest, accelerated, bbar) triples per cell.
  for (std::size_t i = 0; i + 2 < table.rows.size(); i += 3) {
    const TableRow& sd = table.rows[i];
    const TableRow& ag = table.rows[i + 1];
    const TableRow& bb = table.rows[i + 2];
    out << "summary_avg," << sd.n << "," << csv_number(sd.delta) << ",,,,,," << csv_number(sd.avg_iters) << ","
        << csv_number(ag.avg_iters) << "," << csv_number(bb.avg_iters) << "," << sd.censored << ","
        << ag.censored << "\n";
    out << "summary_max," << sd.n << "," << csv_number(sd.delta) << ",,,,,," << sd.max_iters << ","
        << ag.max_iters << "," << bb.max_iters << "," << sd.censored << "," << ag.censored << "\n";
  }
}

Json table_to_json(const TableSpec& spec, const TableResult& table) {
  Json j;
  j["seed"] = spec.seed;
  j["trials"] = spec.trials;
  j["p"] = spec.p;
  j["max_iters"] = spec.max_iters;
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"delta", r.delta},
                        {"method", r.method},
                        {"avg_iters", r.avg_iters},
                        {"max_iters", r.max_iters},
                        {"censored", r.censored}});
  }
  j["rows"] = std::move(rows);
  j["warnings"] = table.warnings;
  return j;
}

}  // namespace saddle::io
