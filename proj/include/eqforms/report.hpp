#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace eqf {

// One verification record.  `identity` is a plain-text statement of the
// relation being checked; `residual` is the measured deviation.
struct CheckRecord {
  std::string name;
  std::string identity;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct RunConfig {
  std::string example = "all";
  std::vector<std::string> checks;  // empty = all
  double T = 40.0;
  double S = 50.0;
  int grid = 0;          // 0 = per-check default
  double tol_scale = 1.0;
  unsigned long seed = 1;
  std::string out;       // empty = stdout

  void validate() const;  // throws std::invalid_argument
};

struct Report {
  std::vector<CheckRecord> records;           // sorted by name on render
  std::vector<std::pair<std::string, std::string>> config_echo;
};

// 17 significant digits, shortest form.
std::string format_g17(double x);

// Deterministic fixed-field-order rendering.  No timestamps, no timings.
std::string render_report(const Report& rep);
void write_report(const Report& rep, const std::string& path);

// Wall-clock times go to a side file so report bytes stay reproducible.
void write_timings(const std::vector<std::pair<std::string, double>>& timings,
                   const std::string& path);

// Parse a stored report back (inverse of render_report, for re-rendering).
Report parse_report(std::istream& in);

// Flat key-value config file: one `key = value` per line, `#` comments.
std::map<std::string, std::string> parse_config_file(const std::string& path);
void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv);

struct DecayPoint {
  double t_or_radius = 0.0;
  double norm = 0.0;
  bool fitted = false;
};

void write_decay_csv(const std::vector<DecayPoint>& rows, std::ostream& out);
std::vector<DecayPoint> read_decay_csv(std::istream& in);

struct FitResult {
  double exponent = 0.0;
  double stderr_exponent = 0.0;
  int points = 0;
};

// Least-squares slope of log(norm) against log(t) over rows with
// fitted == true and t in [t_min, t_max]; requires positive norms.
FitResult fit_decay_exponent(const std::vector<DecayPoint>& rows, double t_min,
                             double t_max);

}  // namespace eqf
