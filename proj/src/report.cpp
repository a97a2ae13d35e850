#include "eqforms/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqf {

void RunConfig::validate() const {
  if (T <= 0.0 || S <= 0.0) throw std::invalid_argument("truncations must be positive");
  if (tol_scale <= 0.0) throw std::invalid_argument("tolerance scale must be positive");
  if (grid < 0) throw std::invalid_argument("grid density must be nonnegative");
}

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string render_report(const Report& rep) {
  std::vector<CheckRecord> recs = rep.records;
  std::sort(recs.begin(), recs.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  std::ostringstream out;
  out << "report-version: 1\n";
  for (const auto& [k, v] : rep.config_echo) out << "config." << k << ": " << v << "\n";
  out << "checks: " << recs.size() << "\n";
  std::size_t failed = 0;
  for (const auto& r : recs)
    if (!r.pass) ++failed;
  out << "failed: " << failed << "\n";
  for (const auto& r : recs) {
    out << "\n";
    out << "check: " << r.name << "\n";
    out << "identity: " << r.identity << "\n";
    out << "residual: " << format_g17(r.residual) << "\n";
    out << "tolerance: " << format_g17(r.tolerance) << "\n";
    out << "status: " << (r.pass ? "pass" : "fail") << "\n";
  }
  return out.str();
}

void write_report(const Report& rep, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path: " + path);
  f << render_report(rep);
}

void write_timings(const std::vector<std::pair<std::string, double>>& timings,
                   const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output path: " + path);
  for (const auto& [name, sec] : timings)
    f << name << ": " << format_g17(sec) << "\n";
}

static std::pair<std::string, std::string> split_kv(const std::string& line,
                                                    const char* sep) {
  auto pos = line.find(sep);
  if (pos == std::string::npos) return {"", ""};
  std::string key = line.substr(0, pos);
  std::string val = line.substr(pos + std::string(sep).size());
  auto trim = [](std::string& s) {
    s.erase(0, s.find_first_not_of(" \t"));
    auto e = s.find_last_not_of(" \t\r");
    s.erase(e == std::string::npos ? 0 : e + 1);
  };
  trim(key);
  trim(val);
  return {key, val};
}

Report parse_report(std::istream& in) {
  Report rep;
  std::string line;
  CheckRecord cur;
  bool open = false;
  while (std::getline(in, line)) {
    auto [key, val] = split_kv(line, ": ");
    if (key.empty() && line.find(':') != std::string::npos) {
      auto p = line.find(':');
      key = line.substr(0, p);
      val = "";
    }
    if (key == "check") {
      if (open) rep.records.push_back(cur);
      cur = CheckRecord{};
      cur.name = val;
      open = true;
    } else if (key == "identity") {
      cur.identity = val;
    } else if (key == "residual") {
      cur.residual = std::stod(val);
    } else if (key == "tolerance") {
      cur.tolerance = std::stod(val);
    } else if (key == "status") {
      cur.pass = (val == "pass");
    } else if (key.rfind("config.", 0) == 0) {
      rep.config_echo.emplace_back(key.substr(7), val);
    }
  }
  if (open) rep.records.push_back(cur);
  return rep;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto [key, val] = split_kv(line, "=");
    if (key.empty()) throw std::runtime_error("bad config line: " + line);
    kv[key] = val;
  }
  return kv;
}

void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, val] : kv) {
    if (key == "example") {
      cfg.example = val;
    } else if (key == "check") {
      std::istringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) cfg.checks.push_back(item);
    } else if (key == "T") {
      cfg.T = std::stod(val);
    } else if (key == "S") {
      cfg.S = std::stod(val);
    } else if (key == "grid") {
      cfg.grid = std::stoi(val);
    } else if (key == "tol") {
      cfg.tol_scale = std::stod(val);
    } else if (key == "seed") {
      cfg.seed = std::stoul(val);
    } else if (key == "out") {
      cfg.out = val;
    } else {
      throw std::runtime_error("unknown config key: " + key);
    }
  }
}

void write_decay_csv(const std::vector<DecayPoint>& rows, std::ostream& out) {
  out << "t_or_radius,norm,fitted_window_flag\n";
  for (const auto& r : rows)
    out << format_g17(r.t_or_radius) << "," << format_g17(r.norm) << ","
        << (r.fitted ? 1 : 0) << "\n";
}

std::vector<DecayPoint> read_decay_csv(std::istream& in) {
  std::vector<DecayPoint> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    std::string a, b, c;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, c, ',');
    rows.push_back({std::stod(a), std::stod(b), std::stoi(c) != 0});
  }
  return rows;
}

FitResult fit_decay_exponent(const std::vector<DecayPoint>& rows, double t_min,
                             double t_max) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (!r.fitted || r.t_or_radius < t_min || r.t_or_radius > t_max) continue;
    if (r.norm <= 0.0 || r.t_or_radius <= 0.0)
      throw std::invalid_argument("decay fit needs positive radii and norms");
    xs.push_back(std::log(r.t_or_radius));
    ys.push_back(std::log(r.norm));
  }
  const int n = int(xs.size());
  if (n < 2) throw std::invalid_argument("decay fit window is degenerate");
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("decay fit window is degenerate");
  FitResult fit;
  fit.exponent = sxy / sxx;
  fit.points = n;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    double resid = ys[i] - my - fit.exponent * (xs[i] - mx);
    ss += resid * resid;
  }
  fit.stderr_exponent = n > 2 ? std::sqrt(ss / ((n - 2) * sxx)) : 0.0;
  return fit;
}

}  // namespace eqf
