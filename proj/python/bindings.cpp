#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqforms/checks.hpp"
#include "eqforms/examples.hpp"

namespace py = pybind11;
using namespace eqf;

namespace {

ExampleCase example_by_name(const std::string& name) {
  if (name == "plane_rotation") return plane_rotation_case();
  if (name == "cotangent_circle") return cotangent_circle_case();
  if (name == "atiyah") return atiyah_case();
  throw std::invalid_argument("unknown example: " + name);
}

Vec to_vec(const std::vector<double>& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i];
  return out;
}

py::list form_coefficients(const ExteriorElement& e) {
  // coefficient of the monomial with bit-mask m at index m
  py::list out;
  for (unsigned m = 0; m < e.size(); ++m) out.append(e[m]);
  return out;
}

py::dict record_dict(const CheckRecord& r) {
  py::dict d;
  d["name"] = r.name;
  d["identity"] = r.identity;
  d["residual"] = r.residual;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_eqforms, m) {
  m.doc() = "equivariant differential forms: curvature, transgression, checks";

  m.def("list_examples", [] {
    return std::vector<std::string>{"plane_rotation", "cotangent_circle",
                                    "atiyah", "exact_symplectic", "torus"};
  });

  m.def("list_checks", [] {
    py::list out;
    for (const auto& d : check_registry()) {
      py::dict e;
      e["name"] = d.name;
      e["example"] = d.example;
      e["identity"] = d.identity;
      out.append(e);
    }
    return out;
  });

  m.def(
      "run_check",
      [](const std::string& name, double T, double S, int grid, double tol,
         unsigned long seed) {
        const CheckDef* d = find_check(name);
        if (!d) throw std::invalid_argument("unknown check: " + name);
        CheckContext ctx;
        ctx.T = T;
        ctx.S = S;
        ctx.grid = grid;
        ctx.tol_scale = tol;
        ctx.seed = seed;
        return record_dict(d->run(ctx));
      },
      py::arg("name"), py::arg("T") = 40.0, py::arg("S") = 50.0,
      py::arg("grid") = 0, py::arg("tol") = 1.0, py::arg("seed") = 1);

  m.def(
      "run_report",
      [](const std::string& example, const std::vector<std::string>& checks,
         double T, double S, int grid, double tol, unsigned long seed) {
        RunConfig cfg;
        cfg.example = example;
        cfg.checks = checks;
        cfg.T = T;
        cfg.S = S;
        cfg.grid = grid;
        cfg.tol_scale = tol;
        cfg.seed = seed;
        return render_report(run_selected(cfg, nullptr));
      },
      py::arg("example") = "all",
      py::arg("checks") = std::vector<std::string>{}, py::arg("T") = 40.0,
      py::arg("S") = 50.0, py::arg("grid") = 0, py::arg("tol") = 1.0,
      py::arg("seed") = 1);

  m.def(
      "chern_form",
      [](const std::string& example, double t, const std::vector<double>& x,
         const std::vector<double>& point) {
        ExampleCase c = example_by_name(example);
        return form_coefficients(chern_form(c.spec, t, to_vec(x), to_vec(point)));
      },
      py::arg("example"), py::arg("t"), py::arg("x"), py::arg("point"));

  m.def(
      "transgression_form",
      [](const std::string& example, double t, const std::vector<double>& x,
         const std::vector<double>& point) {
        ExampleCase c = example_by_name(example);
        return form_coefficients(
            transgression_form(c.spec, t, to_vec(x), to_vec(point)));
      },
      py::arg("example"), py::arg("t"), py::arg("x"), py::arg("point"));

  m.def(
      "equivariant_d_lambda",
      [](const std::string& example, const std::vector<double>& point,
         const std::vector<double>& x) {
        ExampleCase c = example_by_name(example);
        return form_coefficients(
            c.spec.one_form->equivariant(c.action, to_vec(point), to_vec(x)));
      },
      py::arg("example"), py::arg("point"), py::arg("x"));

  m.def(
      "decay_table",
      [](const std::string& profile, int n) {
        std::vector<DecayPoint> rows;
        if (profile == "oscillatory")
          rows = decay_table_oscillatory(n);
        else if (profile == "gaussian")
          rows = decay_table_gaussian(n);
        else
          throw std::invalid_argument("profile must be oscillatory or gaussian");
        py::list out;
        for (const auto& r : rows)
          out.append(py::make_tuple(r.t_or_radius, r.norm, r.fitted));
        return out;
      },
      py::arg("profile"), py::arg("n") = 15);

  m.def(
      "fit_decay_exponent",
      [](const std::vector<std::tuple<double, double, bool>>& rows, double t_min,
         double t_max) {
        std::vector<DecayPoint> pts;
        for (const auto& [t, nrm, fit] : rows) pts.push_back({t, nrm, fit});
        FitResult f = fit_decay_exponent(pts, t_min, t_max);
        py::dict d;
        d["exponent"] = f.exponent;
        d["stderr"] = f.stderr_exponent;
        d["points"] = f.points;
        return d;
      },
      py::arg("rows"), py::arg("t_min"), py::arg("t_max"));
}
