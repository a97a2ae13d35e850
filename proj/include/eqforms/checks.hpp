#pragma once

// Named verification checks over the example catalog.  Each check measures a
// residual against a pinned tolerance; the registry is ordered by name and
// drives both the command-line `run` subcommand and the acceptance gate.

#include <functional>

#include "eqforms/report.hpp"

namespace eqf {

struct CheckContext {
  double T = 40.0;        // t-truncation for localization / multiplicativity
  double S = 50.0;        // truncation for the sum-of-one-forms identity
  int grid = 0;           // 0 = per-check default density
  double tol_scale = 1.0;
  unsigned long seed = 1;
};

struct CheckDef {
  std::string name;
  std::string identity;  // plain statement of the verified relation
  std::string example;   // catalog case exercised, or "generic"
  std::function<CheckRecord(const CheckContext&)> run;
};

// All checks, sorted by name.
const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& name);

// Run the checks selected by cfg (by name and by example filter); returns the
// report, and appends per-check wall times when `timings` is given.
Report run_selected(const RunConfig& cfg,
                    std::vector<std::pair<std::string, double>>* timings = nullptr);

// Decay tables behind the `decay` subcommand and the decay checks.
std::vector<DecayPoint> decay_table_oscillatory(int n_radii = 15);
std::vector<DecayPoint> decay_table_gaussian(int n_radii = 9);

}  // namespace eqf
