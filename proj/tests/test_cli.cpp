#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef EQFORMS_CLI_PATH
#error "EQFORMS_CLI_PATH must be defined by the build"
#endif

namespace {

const std::string cli = EQFORMS_CLI_PATH;

struct CmdResult {
  int exit_code;
  std::string output;
};

CmdResult run_cmd(const std::string& args) {
  std::string out_path = std::string(std::tmpnam(nullptr)) + ".cliout";
  std::string cmd = cli + " " + args + " > " + out_path + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream f(out_path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  std::remove(out_path.c_str());
  return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string tmp_path(const char* suffix) {
  return std::string(std::tmpnam(nullptr)) + suffix;
}

}  // namespace

TEST_CASE("list names examples and checks") {
  CmdResult r = run_cmd("list");
  CHECK(r.exit_code == 0);
  for (const char* s : {"examples:", "checks:", "plane_rotation", "atiyah",
                        "torus", "algebra_laws", "transgression_identity",
                        "theta_dual_route"})
    CHECK(r.output.find(s) != std::string::npos);
}

TEST_CASE("run is deterministic for a fixed config and seed") {
  std::string p1 = tmp_path(".rep1"), p2 = tmp_path(".rep2");
  CmdResult r1 =
      run_cmd("run --check algebra_laws --seed 7 --out " + p1);
  CmdResult r2 =
      run_cmd("run --check algebra_laws --seed 7 --out " + p2);
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  std::string a = slurp(p1), b = slurp(p2);
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.find("status: pass") != std::string::npos);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("run exit codes") {
  CmdResult unknown = run_cmd("run --check no_such_check");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("error:") != std::string::npos);

  // a vanishingly small tolerance scale forces a residual above threshold
  CmdResult fail = run_cmd("run --check transgression_identity --tol 1e-12");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("status: fail") != std::string::npos);
}

TEST_CASE("config file precedence") {
  std::string cfg_path = tmp_path(".cfg");
  {
    std::ofstream f(cfg_path);
    f << "# config for the precedence test\n";
    f << "check = transgression_identity\n";
    f << "tol = 1e-12\n";
    f << "seed = 5\n";
  }
  CmdResult from_file = run_cmd("run --config " + cfg_path);
  CHECK(from_file.exit_code == 1);  // file tolerance makes the check fail
  CmdResult overridden = run_cmd("run --config " + cfg_path + " --tol 1.0");
  CHECK(overridden.exit_code == 0);  // command line wins over the file
  std::remove(cfg_path.c_str());
}

TEST_CASE("decay CSV format") {
  for (const char* profile : {"oscillatory", "gaussian"}) {
    CAPTURE(profile);
    CmdResult r = run_cmd(std::string("decay --profile ") + profile + " --n 6");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "t_or_radius,norm,fitted_window_flag");
    int rows = 0;
    while (std::getline(in, line))
      if (!line.empty()) ++rows;
    CHECK(rows == 6);
  }
  CmdResult bad = run_cmd("decay --profile bogus");
  CHECK(bad.exit_code != 0);
}

TEST_CASE("report re-render round-trips") {
  std::string rep_path = tmp_path(".rep");
  CmdResult r = run_cmd("run --check moment_rotation --check moment_circle --out " +
                        rep_path);
  CHECK(r.exit_code == 0);
  std::string stored = slurp(rep_path);
  CmdResult rr = run_cmd("report --in " + rep_path);
  CHECK(rr.exit_code == 0);
  CHECK(rr.output == stored);
  std::remove(rep_path.c_str());
  std::remove((rep_path + ".timings").c_str());
}
