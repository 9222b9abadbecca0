#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "critpoint/errors.hpp"
#include "critpoint/logmath.hpp"
#include "doctest.h"
#include "support/run_cli.hpp"

using testutil::CliResult;
using testutil::run_cli;

namespace {

namespace fs = std::filesystem;

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "critpoint_cli_tests";
  fs::create_directories(dir);
  return dir;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (t.header.empty()) {
      t.header = cells;
    } else {
      t.rows.push_back(cells);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("critical: reference codes print the expected operating points") {
  const CliResult a = run_cli("critical --n 2040 --k 1912 --d 17");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.out, "ebn0_crit_db=7.0749"));
  CHECK(contains(a.out, "log10_wer=-31.118"));
  CHECK(contains(a.out, "ebn0_crit_linear=5.0991"));

  const CliResult b = run_cli("critical --n 2040 --k 1784 --d 36");
  CHECK(b.exit_code == 0);
  CHECK(contains(b.out, "ebn0_crit_db=6.6239"));
  CHECK(contains(b.out, "log10_wer=-61.289"));

  const CliResult c = run_cli("critical --n 2000 --k 1000 --d 222");
  CHECK(c.exit_code == 0);
  CHECK(contains(c.out, "ebn0_crit_db=6.1921"));
  CHECK(contains(c.out, "log10_wer=-198.834"));
}

TEST_CASE("critical: an undefined dB form is spelled out, not faked") {
  // d > n/2 puts the critical Eb/N0 at a negative linear value
  const CliResult r = run_cli("critical --n 10 --k 5 --d 8");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "ebn0_crit_db=undefined"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("critical --n 10 --k 5 --d 10").exit_code == 2);  // d = n domain
  CHECK(run_cli("critical --n 10 --k 5").exit_code == 2);         // missing --d
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("critical --n 0 --k 0 --d 0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("bounds --help").exit_code == 0);
}

TEST_CASE("gv: conventions, defaults, discrepancy note") {
  const CliResult d = run_cli("gv --n 7 --k 4");
  CHECK(d.exit_code == 0);
  CHECK(contains(d.out, "gv_exact=3"));
  CHECK_FALSE(contains(d.out, "gv_asymptotic"));

  const CliResult both = run_cli("gv --n 2000 --k 1000 --both");
  CHECK(both.exit_code == 0);
  CHECK(contains(both.out, "gv_asymptotic=220"));
  CHECK(contains(both.out, "gv_exact=223"));
  CHECK(contains(both.out, "note=conventions differ by 3"));
  CHECK(contains(both.out, "asymptotic rounds"));
  CHECK(contains(both.out, "exact takes the largest d"));

  const CliResult high = run_cli("gv --n 2040 --k 1784 --both");
  CHECK(high.exit_code == 0);
  CHECK(contains(high.out, "gv_asymptotic=35"));
  CHECK(contains(high.out, "gv_exact=37"));

  // deterministic: byte-identical reruns
  CHECK(run_cli("gv --n 2000 --k 1000 --both").out == both.out);

  CHECK(run_cli("gv --n 7 --k 7").exit_code == 2);
  CHECK(run_cli("gv --n 7 --k 0").exit_code == 2);
  CHECK(run_cli("gv --n 7 --k 4 --both --exact").exit_code == 2);
}

TEST_CASE("bounds: single-weight spectrum reproduces the closed form end to end") {
  const fs::path dir = work_dir();
  const fs::path spec_file = dir / "single_weight.spec";
  const fs::path out_csv = dir / "bounds_single.csv";
  testutil::write_file(spec_file.string(), "n=15 dmin=5\n5 0\n");

  const std::string cmd = "bounds --n 15 --k 7 --d 5 --spectrum " + spec_file.string() +
                          " --methods ub --ebno 4:6:1 -o " + out_csv.string();
  const CliResult r = run_cli(cmd);
  REQUIRE(r.exit_code == 0);

  const CsvTable t = parse_csv(testutil::read_file(out_csv.string()));
  REQUIRE(t.header.size() == 3);
  CHECK(t.header[0] == "ebno_db");
  CHECK(t.header[1] == "ub");
  CHECK(t.header[2] == "status");
  REQUIRE(t.rows.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    const double db = 4.0 + static_cast<double>(i);
    const double gamma = std::pow(10.0, db / 10.0);
    const double want =
        critpoint::ln_q(std::sqrt(2.0 * (7.0 / 15.0) * 5.0 * gamma)) / std::log(10.0);
    CHECK(std::stod(t.rows[i][0]) == doctest::Approx(db).epsilon(1e-9));
    CHECK(std::abs(std::stod(t.rows[i][1]) - want) <= 1e-5);
    CHECK(t.rows[i][2] == "ok");
  }

  // byte-identical rerun
  const std::string first = testutil::read_file(out_csv.string());
  REQUIRE(run_cli(cmd).exit_code == 0);
  CHECK(testutil::read_file(out_csv.string()) == first);
}

TEST_CASE("bounds: input validation exits with 2") {
  const fs::path dir = work_dir();
  const fs::path spec_file = dir / "single_weight.spec";
  testutil::write_file(spec_file.string(), "n=15 dmin=5\n5 0\n");
  const fs::path bad_file = dir / "bad.spec";
  testutil::write_file(bad_file.string(), "n=15 dmin=5\n5 banana\n");

  // spectrum length disagrees with --n
  CHECK(run_cli("bounds --n 31 --k 21 --d 5 --spectrum " + spec_file.string() +
                " --ebno 4:6:1")
            .exit_code == 2);
  CHECK(run_cli("bounds --n 15 --k 7 --d 5 --spectrum " + bad_file.string() + " --ebno 4:6:1")
            .exit_code == 2);
  CHECK(run_cli("bounds --n 15 --k 7 --d 5 --spectrum " + dir.string() + "/absent.spec" +
                " --ebno 4:6:1")
            .exit_code == 2);
  CHECK(run_cli("bounds --n 15 --k 7 --d 5 --ebno 5:4:1").exit_code == 2);
  CHECK(run_cli("bounds --n 15 --k 7 --d 5 --ebno a:b:c").exit_code == 2);
  CHECK(run_cli("bounds --n 15 --k 7 --d 5 --ebno 1:2:0").exit_code == 2);
  CHECK(run_cli("bounds --n 15 --k 7 --d 5 --ebno 4:6:1 --methods frob").exit_code == 2);
}

TEST_CASE("simulate: deterministic CSV output") {
  const fs::path dir = work_dir();
  const fs::path out_csv = dir / "sim.csv";
  const std::string cmd =
      "simulate --code bch_15_7 --decoder bdd --ebno 4:7:1 --seed 99 "
      "--target-errors 50 --max-trials 20000 -o " +
      out_csv.string();
  const CliResult r = run_cli(cmd);
  REQUIRE(r.exit_code == 0);

  const std::string first = testutil::read_file(out_csv.string());
  const CsvTable t = parse_csv(first);
  REQUIRE(t.header.size() == 6);
  CHECK(t.header[0] == "ebno_db");
  CHECK(t.header[1] == "trials");
  CHECK(t.header[2] == "errors");
  CHECK(t.header[3] == "wer");
  CHECK(t.header[4] == "ci_low");
  CHECK(t.header[5] == "ci_high");
  REQUIRE(t.rows.size() == 4);
  for (const auto& row : t.rows) {
    const double wer = std::stod(row[3]);
    CHECK(wer >= 0.0);
    CHECK(wer <= 1.0);
    CHECK(std::stod(row[4]) <= wer + 1e-12);
    CHECK(std::stod(row[5]) >= wer - 1e-12);
  }
  CHECK(contains(first, "# seed: 99 (scheme trial-split-v1)"));

  REQUIRE(run_cli(cmd).exit_code == 0);
  CHECK(testutil::read_file(out_csv.string()) == first);
}

TEST_CASE("simulate: argument validation exits with 2") {
  CHECK(run_cli("simulate --code bch_15_7 --decoder gmd --ebno 4:5:1 --seed 1").exit_code ==
        2);  // GMD needs symbol reliabilities
  CHECK(run_cli("simulate --code golay_23_12 --decoder bdd --ebno 4:5:1 --seed 1").exit_code ==
        2);
  CHECK(run_cli("simulate --code bch_15_7 --decoder viterbi --ebno 4:5:1 --seed 1").exit_code ==
        2);
  CHECK(run_cli("simulate --code bch_15_7 --decoder bdd --ebno 4:5:1").exit_code == 2);
  CHECK(run_cli("simulate --code bch_15_7 --decoder bdd --ebno 4:5:1 --seed 1 "
                "--target-errors 0")
            .exit_code == 2);
}

TEST_CASE("plot: renders series and markers, deterministically") {
  const fs::path dir = work_dir();
  const fs::path csv = dir / "curves.csv";
  const fs::path svg = dir / "plot.svg";
  REQUIRE(run_cli("bounds --n 2040 --k 1912 --d 17 --methods ub,first --ebno 5:7:1 -o " +
                  csv.string())
              .exit_code == 0);

  const std::string cmd = "plot --in " + csv.string() + " --out " + svg.string() +
                          " --mark-critical 7.0749:-31.118 --title bounds";
  REQUIRE(run_cli(cmd).exit_code == 0);
  const std::string body = testutil::read_file(svg.string());
  CHECK(contains(body, "<svg"));
  CHECK(contains(body, "class=\"series\""));
  CHECK(contains(body, "class=\"critical-marker\""));
  CHECK(contains(body, ">ub<"));
  CHECK(contains(body, ">first<"));

  // one polyline per method, each with one vertex per grid point
  size_t polylines = 0;
  for (size_t pos = 0; (pos = body.find("class=\"series\"", pos)) != std::string::npos; ++pos)
    ++polylines;
  CHECK(polylines == 2);

  REQUIRE(run_cli(cmd).exit_code == 0);
  CHECK(testutil::read_file(svg.string()) == body);

  // a simulation CSV feeds the same plotter
  const fs::path sim_csv = dir / "sim_for_plot.csv";
  REQUIRE(run_cli("simulate --code bch_15_7 --decoder bdd --ebno 4:6:1 --seed 7 "
                  "--target-errors 30 --max-trials 20000 -o " +
                  sim_csv.string())
              .exit_code == 0);
  const fs::path svg2 = dir / "plot_sim.svg";
  REQUIRE(run_cli("plot --in " + sim_csv.string() + " --out " + svg2.string()).exit_code == 0);
  CHECK(contains(testutil::read_file(svg2.string()), "class=\"series\""));
}

TEST_CASE("plot: bad inputs exit with 2") {
  const fs::path dir = work_dir();
  const fs::path garbage = dir / "garbage.csv";
  testutil::write_file(garbage.string(), "this is not a curve file\n");
  const fs::path svg = dir / "never.svg";
  CHECK(run_cli("plot --in " + garbage.string() + " --out " + svg.string()).exit_code == 2);
  CHECK(run_cli("plot --in " + dir.string() + "/missing.csv --out " + svg.string()).exit_code ==
        2);
  const fs::path ok_csv = dir / "curves.csv";
  if (fs::exists(ok_csv)) {
    CHECK(run_cli("plot --in " + ok_csv.string() + " --out " + svg.string() +
                  " --mark-critical 1:2:3")
              .exit_code == 2);
    CHECK(run_cli("plot --in " + ok_csv.string() + " --out " + svg.string() +
                  " --mark-critical nope")
              .exit_code == 2);
  }
}

TEST_CASE("exception-to-exit-code mapping") {
  // genuine numeric failures are nearly impossible to provoke end to end, so
  // the 0/2/3 contract is pinned at the mapping level
  using critpoint::cli_exit_code;
  CHECK(cli_exit_code(critpoint::numerical_error("x")) == 3);
  CHECK(cli_exit_code(critpoint::parse_error("x", 4)) == 2);
  CHECK(cli_exit_code(std::invalid_argument("x")) == 2);
  CHECK(cli_exit_code(std::domain_error("x")) == 2);
  CHECK(cli_exit_code(std::runtime_error("x")) == 3);
  CHECK(cli_exit_code(std::out_of_range("x")) == 3);
}
