#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// WITBENCH_CLI_PATH is injected by the build: absolute path of the binary.

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_raw(const std::string& cmd) {
  CliResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CliResult run_cli(const std::string& args) {
  return run_raw(std::string(WITBENCH_CLI_PATH) + " " + args);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr const char* kHeader =
    "k,sigma0,noise,m,upper,lower,p_star,ratio,mu_bound,mc_best_mean,mc_best_ci,"
    "linear_cost,linear_ratio,winner";

}  // namespace

TEST_CASE("bounds subcommand happy path") {
  const CliResult r = run_cli("bounds --k 1 --sigma0 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "noise = uniform\n"));
  CHECK(contains(r.out, "upper = 0.5\n"));
  CHECK(contains(r.out, "lower = 0.134026736265\n"));
  CHECK(contains(r.out, "mu_bound = 50\n"));
  CHECK(contains(r.out, "winner = zero-input\n"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("bounds --k 0").code == 2);
  CHECK(run_cli("bounds").code == 2);               // missing required --k
  CHECK(run_cli("bounds --k 1 --bogus 3").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);                     // a subcommand is required
  CHECK(run_cli("simulate --strategy nope --k 1").code == 2);
  CHECK(run_cli("simulate --strategy best --k 1 --n 10").code == 2);
  CHECK(run_cli("adversarial --strategy quantizer --k 1 --x0-range 1:-1").code == 2);
  CHECK(run_cli("adversarial --strategy quantizer --k 1 --grid 2").code == 2);
  CHECK(run_cli("sweep --k-list 1 --k-range 0.1:1:3 --sigma0-list 1").code == 2);
  CHECK(run_cli("sweep --sigma0-list 1 --n 500").code == 2);  // no k grid
  CHECK(run_cli("bounds --k 1 --noise /no/such/density.txt").code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("sweep --help").code == 0);
}

TEST_CASE("malformed density file exits 3, valid one works") {
  {
    std::ofstream bad("/tmp/witbench_bad_density.txt");
    bad << "0.0 not-a-number\n";
  }
  CHECK(run_cli("bounds --k 1 --noise /tmp/witbench_bad_density.txt").code == 3);
  {
    // flat density on [-2, 2]: standardizes to the uniform model
    std::ofstream good("/tmp/witbench_flat_density.txt");
    good << "# x f\n";
    for (int i = 0; i <= 8; ++i) good << (-2.0 + 0.5 * i) << " 0.25\n";
  }
  const CliResult r = run_cli("bounds --k 1 --noise /tmp/witbench_flat_density.txt");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "noise = custom\n"));
  CHECK(contains(r.out, "upper = 0.5\n"));
}

TEST_CASE("simulate is deterministic on stdout") {
  const std::string cmd =
      "simulate --strategy quantizer --k 1 --sigma0 100 --n 5000 --seed 9";
  const CliResult a = run_cli(cmd);
  const CliResult b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "strategy = quantizer\n"));
  CHECK(contains(a.out, "n = 5000\n"));
  CHECK(contains(a.out, "seed = 9\n"));
  const CliResult c = run_cli(
      "simulate --strategy linear --alpha -0.3 --beta 0.5 --k 1 --n 1000");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "strategy = linear\n"));
}

TEST_CASE("adversarial subcommand") {
  const CliResult q = run_cli("adversarial --strategy quantizer --k 0.5");
  CHECK(q.code == 0);
  CHECK(contains(q.out, "value = 0.75\n"));
  CHECK(contains(q.out, "on_x0_boundary = false\n"));
  CHECK(contains(q.out, "upper = 0.75\n"));

  const CliResult p = run_cli("adversarial --strategy zero-input-passthrough --k 1");
  CHECK(p.code == 0);
  CHECK(contains(p.out, "strategy = zero-input-passthrough\n"));
  CHECK(contains(p.out, "on_x0_boundary = false\n"));
  CHECK(contains(p.out, "upper = 3\n"));

  const CliResult v =
      run_cli("adversarial --strategy linear --alpha -0.5 --beta 0.5 --k 1");
  CHECK(v.code == 0);
  CHECK(contains(v.out, "on_x0_boundary = true\n"));
}

TEST_CASE("sweep writes byte-stable csv files") {
  const std::string base = "sweep --k-list 0.5,1 --sigma0-list 1 --n 1000 --seed 3";
  const CliResult a = run_cli(base + " --out /tmp/witbench_sweep_a.csv");
  const CliResult b = run_cli(base + " --out /tmp/witbench_sweep_b.csv");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  const std::string fa = slurp("/tmp/witbench_sweep_a.csv");
  CHECK(fa == slurp("/tmp/witbench_sweep_b.csv"));
  std::istringstream lines(fa);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == kHeader);
  int nlines = 1;
  while (std::getline(lines, line)) ++nlines;
  CHECK(nlines == 4);  // header + 2 rows + summary
  CHECK(contains(fa, ",pass\n"));
}

TEST_CASE("sweep json output parses and carries the summary") {
  const CliResult r = run_cli(
      "sweep --k-list 0.5,1 --sigma0-list 1 --n 500 --seed 3 --format json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["k"].get<double>() == 0.5);
  CHECK(j[0]["linear_cost"].is_number());
  CHECK(j[2]["k"].get<std::string>() == "summary");
  CHECK(j[2]["winner"].get<std::string>() == "pass");
  CHECK(j[2]["mu_bound"].get<double>() == 50.0);
}

TEST_CASE("sweep handles a degenerate sigma0 of zero") {
  const CliResult r = run_cli("sweep --k-list 1 --sigma0-list 0 --n 200 --seed 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, ",pass\n"));
}

TEST_CASE("unwritable output path exits 3") {
  CHECK(run_cli("sweep --k-list 1 --sigma0-list 1 --n 200 "
                "--out /no/such/dir/out.csv").code == 3);
}

TEST_CASE("adversarial sweep certifies against 2 pi e") {
  const CliResult r = run_cli("sweep --adversarial --k-list 0.5,1,2 --n 1000");
  CHECK(r.code == 0);
  CHECK(contains(r.out, ",inf,"));
  CHECK(contains(r.out, "17.0794684453"));
  CHECK(contains(r.out, ",,quantizer\n"));              // empty linear columns
  CHECK(contains(r.out, ",,zero-input-passthrough\n"));  // k = 2 row
  CHECK(contains(r.out, ",pass\n"));
}

TEST_CASE("config file mirrors the flags") {
  {
    std::ofstream cfg("/tmp/witbench_sweep_cfg.json");
    cfg << R"({"k_grid":[0.5,1],"sigma0_grid":[1.0],"n":1000,"seed":3})";
  }
  const CliResult r = run_cli(
      "sweep --config /tmp/witbench_sweep_cfg.json --out /tmp/witbench_sweep_c.csv");
  CHECK(r.code == 0);
  CHECK(slurp("/tmp/witbench_sweep_c.csv") == slurp("/tmp/witbench_sweep_a.csv"));
  // flags override config values
  const CliResult o = run_cli(
      "sweep --config /tmp/witbench_sweep_cfg.json --k-list 1 --out -");
  CHECK(o.code == 0);
  std::istringstream lines(o.out);
  std::string line;
  int nlines = 0;
  while (std::getline(lines, line)) ++nlines;
  CHECK(nlines == 3);  // header + 1 row + summary
}

TEST_CASE("sweep output is independent of the worker count") {
  const std::string tail =
      " sweep --k-list 0.5,1 --sigma0-list 1,2 --n 500 --seed 7";
  const CliResult one =
      run_raw("env WITBENCH_THREADS=1 " + std::string(WITBENCH_CLI_PATH) + tail);
  const CliResult three =
      run_raw("env WITBENCH_THREADS=3 " + std::string(WITBENCH_CLI_PATH) + tail);
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  CHECK(contains(one.out, "\nsummary,,uniform,1,,,,"));
}

TEST_CASE("sweep accepts a log range and the triangular model") {
  const CliResult r = run_cli(
      "sweep --k-range 0.1:10:5 --sigma0-list 1 --noise triangular --n 200 --seed 2");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int nlines = 0;
  while (std::getline(lines, line)) ++nlines;
  CHECK(nlines == 7);  // header + 5 rows + summary
  CHECK(contains(r.out, ",triangular,"));
}
