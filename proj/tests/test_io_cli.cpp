#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "saddle/cli.hpp"
#include "saddle/io.hpp"

using namespace saddle;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "saddle");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "saddle_io_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("csv numbers use 12 significant digits") {
  CHECK(io::csv_number(1.0 / 3.0) == "0.333333333333");
  CHECK(io::csv_number(2.0) == "2");
}

TEST_CASE("problem json roundtrip") {
  const QuadraticProblem seeded = random_problem(8, 2, 0.1, 42);
  const QuadraticProblem back = io::problem_from_json(io::problem_to_json(seeded));
  CHECK(back.eigenvalues() == seeded.eigenvalues());
  CHECK(back.seed() == seeded.seed());

  const QuadraticProblem rotated = random_rotated_problem(6, 1, 0.1, 3, 4);
  const QuadraticProblem rback = io::problem_from_json(io::problem_to_json(rotated));
  CHECK((rback.basis() - rotated.basis()).norm() <= 1e-15);

  const QuadraticProblem explicit_basis({1.0, -0.5}, Matrix{{0.0, 1.0}, {1.0, 0.0}});
  const QuadraticProblem eback = io::problem_from_json(io::problem_to_json(explicit_basis));
  CHECK(eback.basis() == explicit_basis.basis());

  // Text roundtrip keeps full precision.
  const auto text = io::dump(io::problem_to_json(seeded));
  const QuadraticProblem tback = io::problem_from_json(io::Json::parse(text));
  CHECK(tback.eigenvalues() == seeded.eigenvalues());
}

TEST_CASE("schedule json roundtrip and parsing") {
  for (const MomentumSchedule& s :
       {MomentumSchedule::nesterov(), MomentumSchedule::attouch(2.0), MomentumSchedule::constant(0.9, 0.1),
        MomentumSchedule::polyak(0.25, 1.0), MomentumSchedule::toy(0.5, 0.02, 0.001)}) {
    const MomentumSchedule back = io::schedule_from_json(io::schedule_to_json(s));
    for (long k : {1L, 2L, 10L, 100L}) {
      CHECK(schedule_params(back, k).beta == schedule_params(s, k).beta);
      CHECK(schedule_params(back, k).gamma == schedule_params(s, k).gamma);
    }
  }
  CHECK(schedule_params(io::parse_schedule("attouch:2"), 5).beta == doctest::Approx(0.5));
  CHECK(schedule_params(io::parse_schedule("constant:0.9,0.2"), 3).gamma == 0.2);
  CHECK(schedule_params(io::parse_schedule("toy", 0.5, 0.02, 0.001), 3).beta == doctest::Approx(1.0 - 0.01 - 0.001));
  CHECK(schedule_params(io::parse_schedule("toy:0.5,0.02,0"), 1).beta == doctest::Approx(0.99));
  CHECK_THROWS_AS(io::parse_schedule("momentum"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_schedule("constant:0.9"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_schedule("attouch:x"), std::invalid_argument);
}

TEST_CASE("help exits 0 on every subcommand") {
  CHECK(cli({"--help"}).code == kExitOk);
  for (const char* sub : {"toy", "spectrum", "rates", "simulate", "table", "verify-tk"}) {
    const CliResult r = cli({sub, "--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("--out") != std::string::npos);
    CHECK(r.out.find("--format") != std::string::npos);
  }
}

TEST_CASE("usage errors exit 1") {
  CHECK(cli({"toy", "--bogus", "1"}).code == kExitUsage);
  CHECK(cli({"nothing"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"toy", "--delta", "2"}).code == kExitUsage);
  CHECK(cli({"spectrum", "--lambda=-0.02", "--alpha", "3"}).code == kExitUsage);
  const CliResult r = cli({"toy", "--out", "/nonexistent-dir/x/fig.csv"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("verify-tk") {
  const CliResult r = cli({"verify-tk", "--K", "1000"});
  CHECK(r.code == kExitOk);
  const io::Json j = io::Json::parse(r.out);
  CHECK(j["identity_max_err"].get<double>() <= 1e-9);
  CHECK(r.err.rfind("config: ", 0) == 0);
}

TEST_CASE("toy figure csv has two blocks") {
  const auto path = scratch() / "fig1.csv";
  const CliResult r = cli({"toy", "--delta", "0.02", "--alpha", "0.75", "--beta", "0.985", "--x0", "0.25,0.01",
                           "--iters", "500", "--thin", "5", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  const std::string text = slurp(path);
  CHECK(text.rfind("method,iter,x1,x2\n", 0) == 0);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  int sd = 0, hb = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("steepest_descent,", 0) == 0) ++sd;
    else if (line.rfind("heavy_ball,", 0) == 0) ++hb;
  }
  CHECK(sd == 101);
  CHECK(hb == 101);
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("spectrum of the toy block") {
  const CliResult r = cli({"spectrum", "--lambda=-0.02", "--alpha", "3", "--beta", "0.94", "--json"});
  REQUIRE(r.code == kExitOk);
  const io::Json j = io::Json::parse(r.out);
  const io::Json& block = j["eigenvalues"][0];
  CHECK(std::abs(block["mu_hi"]["re"].get<double>() - (1.0 + std::sqrt(0.06))) <= 1e-12);
  CHECK(std::abs(block["mu_lo"]["re"].get<double>() - (1.0 - std::sqrt(0.06))) <= 1e-12);
  CHECK(block["class"] == "unstable");
}

TEST_CASE("identical argv gives identical bytes") {
  const std::vector<std::vector<std::string>> runs = {
      {"simulate", "--problem", "random", "--method", "hb", "--n", "10", "--p", "2", "--seed", "7", "--iters", "50",
       "--eps-perturb", "1e-6"},
      {"simulate", "--problem", "random", "--method", "ag", "--n", "10", "--basis-seed", "3", "--iters", "40",
       "--project"},
      {"simulate", "--negspace", "--n", "30", "--iters", "60", "--seed", "2"},
      {"table", "--n", "20", "--delta", "0.01", "--trials", "4", "--seed", "3", "--threads", "2"},
      {"rates", "--lambda=-0.01", "--alpha", "1", "--schedule", "attouch:2", "--iters", "100", "--format", "json"},
  };
  for (const auto& args : runs) {
    const CliResult a = cli(args), b = cli(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("out flag writes a file and leaves stdout empty") {
  const auto path = scratch() / "rates.json";
  const CliResult r = cli({"rates", "--lambda=-0.01", "--alpha", "1", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  const io::Json j = io::Json::parse(slurp(path));
  CHECK(j.contains("b_limit"));
}
