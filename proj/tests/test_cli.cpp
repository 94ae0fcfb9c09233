#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(GCRIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string write_file(const std::string& name, const std::string& body) {
  std::ofstream(name) << body;
  return name;
}

bool near(const std::string& cell, double printed, double tol) {
  return std::abs(std::stod(cell) - printed) / printed < tol;
}

}  // namespace

TEST_CASE("compute: yukawa variational record") {
  const auto r = run("compute --potential yukawa --ell 0 --methods variational");
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"ell", "method", "side", "value", "optimal_param", "error_estimate",
                                            "wall_time"});
  CHECK(rows[1][1] == "variational");
  CHECK(rows[1][2] == "upper");
  CHECK(near(rows[1][3], 1.6826, 2e-4));
  CHECK(near(rows[1][4], 1.7217, 1e-3));
}

TEST_CASE("compute: square well, all methods") {
  const auto r = run("compute --potential square_well --ell 1 --methods all");
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 9);
  const std::vector<double> printed{6, 0, 9.8132, 9.1220, 11.719, 10.068, 9.9934, 9.9934};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (printed[i - 1] > 0) CHECK(near(rows[i][3], printed[i - 1], 2e-4));
  }
  CHECK(rows[8][1] == "variational_closed_form");
}

TEST_CASE("compute: bargmann_schwinger, digits, markdown") {
  auto r = run("compute --potential exponential --ell 0 --methods bargmann_schwinger");
  REQUIRE(r.code == 0);
  CHECK(csv_rows(r.out)[1][3] == "1");

  r = run("compute --potential stis --alpha 1 --ell 0 --methods bargmann_schwinger --digits 10");
  CHECK(csv_rows(r.out)[1][3].size() == 11);

  r = run("compute --potential square_well --ell 0 --methods calogero_1 --format md");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("| 0 | calogero_1 | upper | 2.66667 |") != std::string::npos);
}

TEST_CASE("compute: output is deterministic") {
  const std::string args = "compute --potential exponential --ell 0-2 --methods ggmt,calogero_2 --sandwich";
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto rows = csv_rows(a.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"ell", "g_BS", "g_eq2", "g_B", "g_GGMT", "g_c_shoot", "g_c_nystrom",
                                            "g_New", "p*", "g_C1", "g_C2"});
  CHECK(near(rows[3][5], 16.313, 2e-4));
}

TEST_CASE("compute: config file") {
  const auto path = write_file("test_cli_run.ini",
                               "[potential]\nkind = stis\nR = 2\nalpha = 5\n\n[run]\nell = 0\n"
                               "methods = third_order, variational\n\n[quadrature]\nrel_tol = 1e-10\n");
  const auto r = run("compute --config " + path);
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(near(rows[1][3], 1.4837, 2e-4));
  CHECK(near(rows[2][3], 1.4939, 2e-4));
  std::remove(path.c_str());
}

TEST_CASE("exit code 2 on configuration errors") {
  auto r = run("compute --potential stis --alpha -1 --ell 0");
  CHECK(r.code == 2);
  CHECK(r.out.find("alpha") != std::string::npos);
  CHECK(run("compute --potential harmonic").code == 2);
  CHECK(run("compute --potential square_well --methods eq7").code == 2);
  CHECK(run("compute --potential exponential --methods variational_closed_form").code == 2);
  CHECK(run("compute").code == 2);
  CHECK(run("reproduce --table 9").code == 2);
  CHECK(run("frobnicate").code == 2);

  const auto path = write_file("test_cli_bad.ini", "[potential]\nkind = yukawa\nR = zero\n");
  r = run("compute --config " + path);
  CHECK(r.code == 2);
  CHECK(r.out.find("[R]") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("reproduce: table 4") {
  auto r = run("reproduce --table 4");
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0][0] == "alpha");
  CHECK(rows[1][0] == "0.1");
  CHECK(rows[1].back() == "true");

  r = run("reproduce --table 4 --format md");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("| 0.1 |") != std::string::npos);
  CHECK(r.out.find("Result: PASS") != std::string::npos);
}

TEST_CASE("check: square well passes quickly") {
  const auto path = write_file("test_cli_sw.ini", "[potential]\nkind = square_well\n[run]\nell = 0-5\n");
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run("check --config " + path);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all invariants hold") != std::string::npos);
  CHECK(seconds < 10.0);
  std::remove(path.c_str());
}

TEST_CASE("check: inverse-square core fails regularity") {
  std::ostringstream grid;
  for (int k = -60; k <= 2; ++k) {
    const double r = std::exp2(k);
    grid << r << ',' << 1.0 / (r * r) << '\n';
  }
  const auto csv = write_file("test_cli_singular.csv", grid.str());
  const auto ini = write_file("test_cli_singular.ini", "[potential]\nkind = tabulated\ngrid = " + csv + "\n");
  const auto r = run("check --config " + ini);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL regularity") != std::string::npos);
  CHECK(r.out.find("r -> 0") != std::string::npos);
  std::remove(csv.c_str());
  std::remove(ini.c_str());
}
