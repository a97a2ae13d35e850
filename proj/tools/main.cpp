#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "eqforms/checks.hpp"
#include "eqforms/examples.hpp"

namespace {

int cmd_list() {
  std::cout << "examples:\n";
  for (const char* name : {"plane_rotation", "cotangent_circle", "atiyah",
                           "exact_symplectic", "torus"})
    std::cout << "  " << name << "\n";
  std::cout << "checks:\n";
  for (const auto& d : eqf::check_registry())
    std::cout << "  " << d.name << "  [" << d.example << "]  " << d.identity
              << "\n";
  return 0;
}

int cmd_run(const eqf::RunConfig& cfg) {
  std::vector<std::pair<std::string, double>> timings;
  eqf::Report rep = eqf::run_selected(cfg, &timings);
  if (cfg.out.empty()) {
    std::cout << eqf::render_report(rep);
  } else {
    eqf::write_report(rep, cfg.out);
    eqf::write_timings(timings, cfg.out + ".timings");
  }
  for (const auto& r : rep.records)
    if (!r.pass) return 1;
  return 0;
}

int cmd_decay(const std::string& profile, int n, const std::string& out) {
  std::vector<eqf::DecayPoint> rows;
  if (profile == "oscillatory")
    rows = eqf::decay_table_oscillatory(n);
  else if (profile == "gaussian")
    rows = eqf::decay_table_gaussian(n);
  else
    throw CLI::ValidationError("--profile must be oscillatory or gaussian");
  if (out.empty()) {
    eqf::write_decay_csv(rows, std::cout);
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path: " + out);
    eqf::write_decay_csv(rows, f);
  }
  return 0;
}

int cmd_report(const std::string& in) {
  std::ifstream f(in);
  if (!f) throw std::runtime_error("cannot read report: " + in);
  eqf::Report rep = eqf::parse_report(f);
  std::cout << eqf::render_report(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant-form verification driver"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list catalog examples and checks");

  eqf::RunConfig cfg;
  std::string config_path;
  auto* run = app.add_subcommand("run", "run verification checks");
  auto* o_example = run->add_option("--example", cfg.example, "catalog example filter");
  auto* o_check = run->add_option("--check", cfg.checks, "check names (repeatable)");
  auto* o_t = run->add_option("--T", cfg.T, "t-truncation");
  auto* o_s = run->add_option("--S", cfg.S, "sum-of-one-forms truncation");
  auto* o_grid = run->add_option("--grid", cfg.grid, "grid density override");
  auto* o_tol = run->add_option("--tol", cfg.tol_scale, "tolerance scale factor");
  auto* o_seed = run->add_option("--seed", cfg.seed, "random seed");
  auto* o_out = run->add_option("--out", cfg.out, "report output path");
  run->add_option("--config", config_path, "flat key-value config file");

  std::string profile = "oscillatory", decay_out;
  int decay_n = 15;
  auto* decay = app.add_subcommand("decay", "emit CSV decay tables");
  decay->add_option("--profile", profile, "oscillatory or gaussian");
  decay->add_option("--n", decay_n, "number of radii");
  decay->add_option("--out", decay_out, "CSV output path");

  std::string report_in;
  auto* report = app.add_subcommand("report", "re-render a stored report");
  report->add_option("--in", report_in, "stored report path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list();
    if (run->parsed()) {
      if (!config_path.empty()) {
        // precedence: command line > config file > defaults
        eqf::RunConfig file_cfg;
        eqf::apply_config(file_cfg, eqf::parse_config_file(config_path));
        if (!*o_example) cfg.example = file_cfg.example;
        if (!*o_check) cfg.checks = file_cfg.checks;
        if (!*o_t) cfg.T = file_cfg.T;
        if (!*o_s) cfg.S = file_cfg.S;
        if (!*o_grid) cfg.grid = file_cfg.grid;
        if (!*o_tol) cfg.tol_scale = file_cfg.tol_scale;
        if (!*o_seed) cfg.seed = file_cfg.seed;
        if (!*o_out && !file_cfg.out.empty()) cfg.out = file_cfg.out;
      }
      return cmd_run(cfg);
    }
    if (decay->parsed()) return cmd_decay(profile, decay_n, decay_out);
    if (report->parsed()) return cmd_report(report_in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
