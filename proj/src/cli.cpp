#include "saddle/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "saddle/errors.hpp"
#include "saddle/experiments.hpp"
#include "saddle/io.hpp"
#include "saddle/optimizers.hpp"
#include "saddle/problems.hpp"
#include "saddle/rates.hpp"
#include "saddle/rng.hpp"
#include "saddle/schedules.hpp"
#include "saddle/spectral.hpp"

namespace saddle {

namespace {

using io::Json;

struct Output {
  std::string path;
  std::string format;
};

void add_output(CLI::App* cmd, Output& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--out", o.path, "Output file (standard output when omitted)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// Thrown for problems the user must fix; mapped to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + o.path + "'");
  file << text;
  file.flush();
  if (!file) throw UsageError("failed writing output file '" + o.path + "'");
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw UsageError("invalid coordinate '" + item + "'");
    }
    if (used != item.size()) throw UsageError("invalid coordinate '" + item + "'");
  }
  if (out.empty()) throw UsageError("empty point");
  return out;
}

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void echo_config(std::ostream& err, const std::string& command, const Json& config) {
  Json j;
  j["command"] = command;
  j["config"] = config;
  err << "config: " << j.dump() << "\n";
}

// ---------------------------------------------------------------------------

struct ToyOptions {
  double delta = 0.02;
  double alpha = 0.75;
  double beta = 0.985;
  std::string x0 = "0.25,0.01";
  long iters = 500;
  long thin = 5;
  Output output;
};

int run_toy(const ToyOptions& o, std::ostream& out, std::ostream& err) {
  const Vector x0 = to_vector(parse_point(o.x0));
  echo_config(err, "toy",
              Json{{"delta", o.delta}, {"alpha", o.alpha}, {"beta", o.beta}, {"x0", parse_point(o.x0)},
                   {"iters", o.iters}, {"thin", o.thin}, {"format", o.output.format}});
  const ToyFigure fig = toy_figure(o.delta, o.alpha, o.beta, x0, o.iters, o.thin);
  if (o.output.format == "csv") {
    std::ostringstream text;
    io::write_toy_figure_csv(text, fig);
    emit(o.output, text.str(), out);
    return kExitOk;
  }
  auto series = [](const IterationTrace& t) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < t.iterates.size(); ++i) {
      arr.push_back(Json{{"iter", t.steps[i]}, {"x1", t.iterates[i][0]}, {"x2", t.iterates[i][1]}});
    }
    return arr;
  };
  auto opt = [](const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["steepest_descent"] = Json{{"escape_iter", opt(fig.steepest_escape)}, {"iterates", series(fig.steepest)}};
  j["heavy_ball"] = Json{{"escape_iter", opt(fig.heavy_ball_escape)}, {"iterates", series(fig.heavy_ball)}};
  emit(o.output, io::dump(j), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SpectrumOptions {
  std::vector<double> lambdas;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> toy_delta;
  int n = 0;
  int p = 1;
  double delta = 1e-2;
  std::uint64_t seed = 0;
  bool json = false;
  Output output;
};

int run_spectrum(SpectrumOptions o, std::ostream& out, std::ostream& err) {
  if (o.json) o.output.format = "json";
  echo_config(err, "spectrum",
              Json{{"lambda", o.lambdas}, {"alpha", o.alpha}, {"beta", o.beta},
                   {"toy", o.toy_delta ? Json(*o.toy_delta) : Json(nullptr)}, {"n", o.n}, {"p", o.p},
                   {"delta", o.delta}, {"seed", o.seed}, {"format", o.output.format}});

  Json report;
  std::vector<EigenPair> pairs;
  if (!o.lambdas.empty()) {
    if (o.toy_delta || o.n > 0) throw UsageError("--lambda cannot be combined with --toy or --n");
    for (double lambda : o.lambdas) pairs.push_back(block_eigenvalues(lambda, o.alpha, o.beta));
    Json records = Json::array();
    for (const auto& pair : pairs) records.push_back(io::eigenpair_to_json(pair));
    report["eigenvalues"] = std::move(records);
  } else {
    std::optional<QuadraticProblem> problem;
    if (o.toy_delta) {
      problem = toy_problem(*o.toy_delta);
    } else if (o.n > 0) {
      problem = random_problem(o.n, o.p, o.delta, o.seed);
    } else {
      throw UsageError("spectrum needs --lambda, --toy DELTA, or --n/--p/--delta/--seed");
    }
    const SpectrumClassification spec = classify_saddle_map(*problem, o.alpha, o.beta);
    pairs = spec.blocks;
    report = io::spectrum_to_json(spec);
  }

  if (o.output.format == "json") {
    emit(o.output, io::dump(report), out);
    return kExitOk;
  }
  std::ostringstream text;
  text << "lambda,mu_hi_re,mu_hi_im,mu_lo_re,mu_lo_im,class\n";
  for (const auto& p : pairs) {
    text << io::csv_number(p.lambda) << "," << io::csv_number(p.mu_hi.real()) << ","
         << io::csv_number(p.mu_hi.imag()) << "," << io::csv_number(p.mu_lo.real()) << ","
         << io::csv_number(p.mu_lo.imag()) << "," << to_string(classify_block(p)) << "\n";
  }
  emit(o.output, text.str(), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct RatesOptions {
  double lambda = -0.01;
  double alpha = 0.99;
  std::string schedule = "nesterov";
  double delta = 0.0;
  double gamma = 0.0;
  long iters = 10000;
  double projection = 1.0;
  double threshold = 100.0;
  Output output;
};

int run_rates(const RatesOptions& o, std::ostream& out, std::ostream& err) {
  const MomentumSchedule schedule = io::parse_schedule(o.schedule, o.alpha, o.delta, o.gamma);
  echo_config(err, "rates",
              Json{{"lambda", o.lambda}, {"alpha", o.alpha}, {"schedule", io::schedule_to_json(schedule)},
                   {"iters", o.iters}, {"projection", o.projection}, {"threshold", o.threshold},
                   {"format", o.output.format}});
  const RateSequence seq = b_sequence(o.lambda, o.alpha, schedule, o.iters);
  const RateLimit limit = b_limit(o.lambda, o.alpha, schedule);
  const long predicted = predicted_escape_iters(limit.bar_b, o.projection, o.threshold);
  if (o.output.format == "json") {
    emit(o.output, io::dump(io::rate_report(seq, limit, predicted)), out);
    return kExitOk;
  }
  std::ostringstream text;
  text << "k,b_k\n";
  for (std::size_t k = 0; k < seq.values.size(); ++k) text << k << "," << io::csv_number(seq.values[k]) << "\n";
  emit(o.output, text.str(), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SimulateOptions {
  std::string problem = "random";
  std::string method = "ag";
  int n = 100;
  int p = 5;
  double delta = 1e-2;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> basis_seed;
  std::optional<double> alpha;
  std::optional<double> beta;
  double gamma = 1e-3;
  std::string schedule = "nesterov";
  long iters = 1000;
  std::optional<double> eps_perturb;
  std::string x0;
  std::optional<double> threshold;
  long thin = 1;
  bool project = false;
  bool negspace = false;
  Output output;
};

int run_negspace(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  NegspaceSpec spec;
  spec.n = o.n;
  spec.delta = o.delta;
  spec.seed = o.seed;
  spec.iters = o.iters;
  spec.hb_gamma_hat = o.gamma;
  spec.hb_beta = o.beta;
  const NegspaceResult r = negspace_experiment(spec);
  echo_config(err, "simulate",
              Json{{"negspace", true}, {"n", o.n}, {"delta", o.delta}, {"seed", o.seed}, {"iters", o.iters},
                   {"gd_alpha", r.gd_alpha}, {"hb_alpha", r.hb_alpha}, {"hb_beta", r.hb_beta},
                   {"ag_alpha", r.ag_alpha}, {"bar_b", r.bar_b}, {"thin", o.thin}, {"format", o.output.format}});
  if (o.output.format == "csv") {
    std::ostringstream text;
    io::write_negspace_csv(text, r, o.thin);
    emit(o.output, text.str(), out);
    return kExitOk;
  }
  Json j;
  j["problem"] = io::problem_to_json(r.problem);
  j["gd_alpha"] = r.gd_alpha;
  j["hb_alpha"] = r.hb_alpha;
  j["hb_beta"] = r.hb_beta;
  j["ag_alpha"] = r.ag_alpha;
  j["bar_b"] = r.bar_b;
  j["initial_projection"] = r.initial_projection;
  auto arr = [](const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(std::isfinite(x) ? Json(x) : Json(nullptr));
    return a;
  };
  j["gd"] = arr(r.gd);
  j["heavy_ball"] = arr(r.hb);
  j["accelerated"] = arr(r.ag);
  j["predictor"] = arr(r.predictor);
  emit(o.output, io::dump(j), out);
  return kExitOk;
}

int run_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  if (o.negspace) return run_negspace(o, out, err);

  std::optional<QuadraticProblem> problem;
  if (o.problem == "toy") {
    problem = toy_problem(o.delta);
  } else if (o.basis_seed) {
    problem = random_rotated_problem(o.n, o.p, o.delta, o.seed, *o.basis_seed);
  } else {
    problem = random_problem(o.n, o.p, o.delta, o.seed);
  }
  const int n = problem->dim();
  Vector x0;
  if (!o.x0.empty()) {
    x0 = to_vector(parse_point(o.x0));
    if (x0.size() != n) throw UsageError("--x0 has " + std::to_string(x0.size()) + " entries, problem has n=" + std::to_string(n));
  } else {
    Rng rng = Rng::stream(o.seed, 1);
    x0 = uniform_in_ball(rng, n);
  }
  const double L = problem->lipschitz();
  const double default_scale = o.method == "ag" ? 0.99 : 1.0;
  const double alpha = o.alpha.value_or(default_scale / L);
  PreviousIteratePolicy previous = EqualToX0{};
  if (o.eps_perturb) previous = Perturbed{*o.eps_perturb, o.seed};

  MomentumSchedule schedule;
  double beta = 0.0;
  if (o.method == "hb") {
    beta = o.beta.value_or(1.0 - alpha * std::abs(problem->eigenvalue(n - 1)) - o.gamma);
    schedule = MomentumSchedule::constant(beta, 0.0);
  } else if (o.method == "ag") {
    schedule = io::parse_schedule(o.schedule, alpha, std::abs(problem->eigenvalue(n - 1)), o.gamma);
  }

  Json config{{"problem", io::problem_to_json(*problem)},
              {"method", o.method},
              {"alpha", alpha},
              {"iters", o.iters},
              {"seed", o.seed},
              {"eps_perturb", o.eps_perturb ? Json(*o.eps_perturb) : Json(nullptr)},
              {"thin", o.thin},
              {"format", o.output.format}};
  if (o.method == "hb") config["beta"] = beta;
  if (o.method == "ag") config["schedule"] = io::schedule_to_json(schedule);
  echo_config(err, "simulate", config);

  const QuadraticOracle oracle(*problem);
  RunControl control;
  control.record_every = o.thin;
  IterationTrace trace;
  if (o.method == "gd") {
    trace = run_gradient_descent(oracle, alpha, x0, o.iters, control);
  } else if (o.method == "hb") {
    trace = run_heavy_ball(oracle, alpha, beta, x0, previous, o.iters, control);
  } else {
    trace = run_accelerated(oracle, alpha, schedule, x0, previous, o.iters, control);
  }
  const Projector negative = negative_eigenspace_projector(*problem);
  if (trace.diverged) err << "warning: run diverged at step " << trace.steps_taken << "\n";
  if (o.threshold) {
    RunControl full;
    full.record_values = false;
    full.stop = [&](long, const Vector& x) { return (negative * x).norm() >= *o.threshold; };
    IterationTrace probe = o.method == "gd"   ? run_gradient_descent(oracle, alpha, x0, o.iters, full)
                           : o.method == "hb" ? run_heavy_ball(oracle, alpha, beta, x0, previous, o.iters, full)
                                              : run_accelerated(oracle, alpha, schedule, x0, previous, o.iters, full);
    if (probe.stopped) {
      err << "escape_iter: " << probe.steps_taken << "\n";
    } else {
      err << "escape_iter: none within " << o.iters << " iterations\n";
    }
  }

  if (o.output.format == "csv") {
    std::ostringstream text;
    io::write_trace_csv(text, trace, 1, o.project ? &negative : nullptr);
    emit(o.output, text.str(), out);
    return kExitOk;
  }
  Json j;
  j["diverged"] = trace.diverged;
  j["steps_taken"] = trace.steps_taken;
  Json rows = Json::array();
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    const Vector v = o.project ? Vector(negative * trace.iterates[i]) : trace.iterates[i];
    rows.push_back(Json{{"iter", trace.steps[i]},
                        {o.project ? "proj" : "x", std::vector<double>(v.begin(), v.end())},
                        {"f", trace.values[i]},
                        {"grad_norm", trace.grad_norms[i]}});
  }
  j["iterates"] = std::move(rows);
  emit(o.output, io::dump(j), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct TableOptions {
  std::vector<int> ns{100, 1000};
  std::vector<double> deltas{1e-2, 1e-3};
  int trials = 100;
  int p = 5;
  std::uint64_t seed = 0;
  long iters = 1'000'000;
  std::optional<double> threshold;
  unsigned threads = 0;
  Output output;
};

int run_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
  TableSpec spec;
  spec.ns = o.ns;
  spec.deltas = o.deltas;
  spec.trials = o.trials;
  spec.p = o.p;
  spec.seed = o.seed;
  spec.max_iters = o.iters;
  spec.threshold = o.threshold;
  spec.threads = o.threads;
  echo_config(err, "table",
              Json{{"n", o.ns}, {"delta", o.deltas}, {"trials", o.trials}, {"p", o.p}, {"seed", o.seed},
                   {"max_iters", o.iters}, {"threshold", o.threshold ? Json(*o.threshold) : Json("n")},
                   {"format", o.output.format}});
  const TableResult table = divergence_table(spec);
  for (const auto& w : table.warnings) err << "warning: " << w << "\n";
  std::ostringstream text;
  if (o.output.format == "csv") {
    io::write_table_csv(text, table);
  } else {
    text << io::dump(io::table_to_json(spec, table));
  }
  emit(o.output, text.str(), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyTkOptions {
  long K = 1000;
  Output output;
};

int run_verify_tk(const VerifyTkOptions& o, std::ostream& out, std::ostream& err) {
  echo_config(err, "verify-tk", Json{{"K", o.K}, {"format", o.output.format}});
  const TkReport report = verify_tk_properties(o.K);
  if (o.output.format == "json") {
    emit(o.output, io::dump(io::tk_report_to_json(report)), out);
  } else {
    std::ostringstream text;
    text << "K,identity_max_err,identity_ok,bound_ok,ratio_monotone,ratio_bounds_ok,ratio_final,ratio_gap\n"
         << report.K << "," << io::csv_number(report.identity_max_err) << "," << report.identity_ok << ","
         << report.bound_ok << "," << report.ratio_monotone << "," << report.ratio_bounds_ok << ","
         << io::csv_number(report.ratio_final) << "," << io::csv_number(report.ratio_gap) << "\n";
    emit(o.output, text.str(), out);
  }
  for (const auto& v : report.violations) err << "violation: " << v << "\n";
  return report.ok() ? kExitOk : kExitPropertyViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Momentum methods near strict saddle points: trajectories, spectra, divergence rates", "saddle"};
  app.require_subcommand(1);

  ToyOptions toy;
  auto* toy_cmd = app.add_subcommand("toy", "Steepest descent vs heavy-ball on f = (x1^2 - delta x2^2)/2");
  toy_cmd->add_option("--delta", toy.delta, "Negative curvature magnitude, 0 < delta < 1")->capture_default_str();
  toy_cmd->add_option("--alpha", toy.alpha, "Stepsize")->capture_default_str();
  toy_cmd->add_option("--beta", toy.beta, "Heavy-ball momentum")->capture_default_str();
  toy_cmd->add_option("--x0", toy.x0, "Start point x1,x2")->capture_default_str();
  toy_cmd->add_option("--iters", toy.iters, "Iterations")->capture_default_str();
  toy_cmd->add_option("--thin", toy.thin, "Write every m-th iterate")->capture_default_str()->check(CLI::PositiveNumber);
  add_output(toy_cmd, toy.output, "csv");

  SpectrumOptions spectrum;
  auto* spec_cmd = app.add_subcommand("spectrum", "Eigenvalues of the heavy-ball iteration map at a saddle");
  spec_cmd->add_option("--lambda", spectrum.lambdas, "Hessian eigenvalue(s); repeat for several blocks");
  spec_cmd->add_option("--alpha", spectrum.alpha, "Stepsize")->required();
  spec_cmd->add_option("--beta", spectrum.beta, "Momentum")->required();
  spec_cmd->add_option("--toy", spectrum.toy_delta, "Classify the toy saddle with this delta");
  spec_cmd->add_option("--n", spectrum.n, "Classify a random problem of this dimension");
  spec_cmd->add_option("--p", spectrum.p, "Negative eigenvalue count of the random problem")->capture_default_str();
  spec_cmd->add_option("--delta", spectrum.delta, "Negative eigenvalues drawn from [-2 delta, -delta]")->capture_default_str();
  spec_cmd->add_option("--seed", spectrum.seed, "Random problem seed")->capture_default_str();
  spec_cmd->add_flag("--json", spectrum.json, "Shorthand for --format json");
  add_output(spec_cmd, spectrum.output, "json");

  RatesOptions rates;
  auto* rates_cmd = app.add_subcommand("rates", "Divergence-rate recurrence b_k and its limit");
  rates_cmd->add_option("--lambda", rates.lambda, "Negative Hessian eigenvalue")->capture_default_str();
  rates_cmd->add_option("--alpha", rates.alpha, "Stepsize")->capture_default_str();
  rates_cmd->add_option("--schedule", rates.schedule,
                        "nesterov | attouch:ETA | constant:B,G | polyak:M,L | toy[:A,D,G]")
      ->capture_default_str();
  rates_cmd->add_option("--delta", rates.delta, "delta for a bare 'toy' schedule")->capture_default_str();
  rates_cmd->add_option("--gamma", rates.gamma, "gamma_hat for a bare 'toy' schedule")->capture_default_str();
  rates_cmd->add_option("--iters", rates.iters, "K, number of recurrence steps")->capture_default_str();
  rates_cmd->add_option("--projection", rates.projection, "Initial projection for the escape prediction")->capture_default_str();
  rates_cmd->add_option("--threshold", rates.threshold, "Escape threshold for the prediction")->capture_default_str();
  add_output(rates_cmd, rates.output, "json");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run one optimizer and export its trace");
  sim_cmd->add_option("--problem", sim.problem, "toy | random")->check(CLI::IsMember({"toy", "random"}))->capture_default_str();
  sim_cmd->add_option("--method", sim.method, "gd | hb | ag")->check(CLI::IsMember({"gd", "hb", "ag"}))->capture_default_str();
  sim_cmd->add_option("--n", sim.n, "Dimension")->capture_default_str();
  sim_cmd->add_option("--p", sim.p, "Negative eigenvalue count")->capture_default_str();
  sim_cmd->add_option("--delta", sim.delta, "Negative curvature scale")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Seed for problem, start point and perturbation")->capture_default_str();
  sim_cmd->add_option("--basis-seed", sim.basis_seed, "Rotate the random problem by a seeded orthogonal basis");
  sim_cmd->add_option("--alpha", sim.alpha, "Stepsize (default 1/L; 0.99/L for ag)");
  sim_cmd->add_option("--beta", sim.beta, "Heavy-ball momentum (default 1 - alpha|lambda_n| - gamma)");
  sim_cmd->add_option("--gamma", sim.gamma, "gamma_hat offset of the heavy-ball toy family")->capture_default_str();
  sim_cmd->add_option("--schedule", sim.schedule, "Schedule for ag")->capture_default_str();
  sim_cmd->add_option("--iters", sim.iters, "Iterations")->capture_default_str();
  sim_cmd->add_option("--eps-perturb", sim.eps_perturb, "Perturb x^{-1} = x0 + eps*y");
  sim_cmd->add_option("--x0", sim.x0, "Start point (default uniform in the unit ball)");
  sim_cmd->add_option("--threshold", sim.threshold, "Report the first step with |P_neg x| >= threshold");
  sim_cmd->add_option("--thin", sim.thin, "Write every m-th iterate")->capture_default_str()->check(CLI::PositiveNumber);
  sim_cmd->add_flag("--project", sim.project, "Write negative-eigenspace components instead of coordinates");
  sim_cmd->add_flag("--negspace", sim.negspace,
                    "Single negative eigenvalue experiment: GD, heavy-ball, accelerated and predictor series");
  add_output(sim_cmd, sim.output, "csv");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Divergence table over seeded random problems");
  table_cmd->add_option("--n", table.ns, "Dimensions")->delimiter(',')->capture_default_str();
  table_cmd->add_option("--delta", table.deltas, "Negative curvature scales")->delimiter(',')->capture_default_str();
  table_cmd->add_option("--trials", table.trials, "Trials per cell")->capture_default_str()->check(CLI::PositiveNumber);
  table_cmd->add_option("--p", table.p, "Negative eigenvalue count")->capture_default_str();
  table_cmd->add_option("--seed", table.seed, "Master seed")->capture_default_str();
  table_cmd->add_option("--iters", table.iters, "Per-trial iteration cap (censoring)")->capture_default_str();
  table_cmd->add_option("--threshold", table.threshold, "Escape threshold (default n)");
  table_cmd->add_option("--threads", table.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_output(table_cmd, table.output, "csv");

  VerifyTkOptions vtk;
  auto* vtk_cmd = app.add_subcommand("verify-tk", "Check the algebraic properties of Nesterov's t_k sequence");
  vtk_cmd->add_option("--K", vtk.K, "Sequence length")->capture_default_str();
  add_output(vtk_cmd, vtk.output, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (toy_cmd->parsed()) return run_toy(toy, out, err);
    if (spec_cmd->parsed()) return run_spectrum(spectrum, out, err);
    if (rates_cmd->parsed()) return run_rates(rates, out, err);
    if (sim_cmd->parsed()) return run_simulate(sim, out, err);
    if (table_cmd->parsed()) return run_table(table, out, err);
    if (vtk_cmd->parsed()) return run_verify_tk(vtk, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace saddle
