#pragma once

// Superconnection curvature assembly, Chern and transgression forms, and
// truncated beta integrals:
//
//   F(t)(X) = -t^2 v^2 + mu(X) + it [A, v] + A^2 + it (d lambda - <f_lambda, X>) Id
//   Ch(t)(X) = Str exp F(t)(X)
//   eta(t)(X) = -Str( i (v + lambda Id) exp F(t)(X) )
//   beta_T(X) = integral of eta over [0, T]
//
// All matrix-valued forms here are stored through the row-sign
// representation of the graded tensor algebra (see graded_matrix.hpp), so
// odd-degree coefficients carry an extra minus sign on their E- rows and
// traces go through supertrace_graded.  Supplied connection fields must
// already be in that representation.

#include <limits>
#include <optional>

#include "eqforms/equivariant.hpp"
#include "eqforms/quadrature.hpp"
#include "eqforms/super_exp.hpp"

namespace eqf {

struct SymbolMorphism {
  int dim_plus = 0;
  int dim_minus = 0;
  std::function<Matc(const Vec& point)> eval;  // dim_minus x dim_plus
  // optional analytic partial derivative in chart direction i
  std::function<Matc(const Vec& point, int i)> partial;
};

// [[0, sigma*], [sigma, 0]] on E+ (+) E-, basis E+ first.
inline GradedMatrixForm assemble_v_sigma(const SymbolMorphism& sym, const Vec& point,
                                         int n_generators) {
  Matc s = sym.eval(point);
  if (s.rows() != sym.dim_minus || s.cols() != sym.dim_plus)
    throw std::invalid_argument("assemble_v_sigma: symbol shape mismatch");
  GradedMatrixForm v(sym.dim_plus, sym.dim_minus, n_generators);
  v[0].block(0, sym.dim_plus, sym.dim_plus, sym.dim_minus) = s.adjoint();
  v[0].block(sym.dim_plus, 0, sym.dim_minus, sym.dim_plus) = s;
  return v;
}

// smallest eigenvalue of v_sigma^2 (equals smallest singular value of sigma
// squared when dim_plus == dim_minus)
inline double h_sigma(const SymbolMorphism& sym, const Vec& point) {
  Matc s = sym.eval(point);
  Matc v2p = s.adjoint() * s;
  Matc v2m = s * s.adjoint();
  double h = std::numeric_limits<double>::infinity();
  if (v2p.rows() > 0) h = std::min(h, smallest_eigenvalue(v2p));
  if (v2m.rows() > 0) h = std::min(h, smallest_eigenvalue(v2m));
  return h;
}

// d v_sigma, via analytic symbol partials when supplied, else central
// differences with one Richardson level
inline GradedMatrixForm d_v_sigma(const SymbolMorphism& sym, const Vec& point,
                                  int n_generators) {
  GradedMatrixForm out(sym.dim_plus, sym.dim_minus, n_generators);
  auto ds = [&](int i) -> Matc {
    if (sym.partial) return sym.partial(point, i);
    const double h = fd_step(point);
    auto central = [&](double hh) {
      Vec pp = point, pm = point;
      pp(i) += hh;
      pm(i) -= hh;
      return Matc(((sym.eval(pp) - sym.eval(pm)) / (2.0 * hh)));
    };
    Matc d1 = central(h), d2 = central(0.5 * h);
    return Matc((4.0 * d2 - d1) / 3.0);
  };
  for (int i = 0; i < n_generators; ++i) {
    Matc d = ds(i);
    out[1u << i].block(0, sym.dim_plus, sym.dim_plus, sym.dim_minus) = d.adjoint();
    out[1u << i].block(sym.dim_plus, 0, sym.dim_minus, sym.dim_plus) = -d;
  }
  return out;
}

struct SuperconnectionSpec {
  int dim_plus = 1;
  int dim_minus = 0;
  ChartedAction action;
  std::optional<SymbolMorphism> symbol;      // absent: zero symbol
  std::optional<InvariantOneForm> one_form;  // lambda; absent: zero
  std::optional<FormField> connection;       // A - d part, degree >= 1; absent: zero
  // mu^A(X), exterior degree 0; absent: zero
  std::function<Matc(const Vec& point, const Vec& x)> moment;
};

inline GradedMatrixForm assemble_curvature(const SuperconnectionSpec& spec, double t,
                                           const Vec& x, const Vec& point) {
  if (t < 0.0) throw std::invalid_argument("assemble_curvature: t must be >= 0");
  const int n = spec.action.chart_dim;
  GradedMatrixForm f(spec.dim_plus, spec.dim_minus, n);
  const cplx it(0.0, t);

  if (spec.symbol) {
    GradedMatrixForm v = assemble_v_sigma(*spec.symbol, point, n);
    f -= (t * t) * wedge_product(v, v);
    f += it * d_v_sigma(*spec.symbol, point, n);
    if (spec.connection) {
      GradedMatrixForm a = spec.connection->eval(point, x);
      f += it * (wedge_product(a, v) + wedge_product(v, a));
    }
  }
  if (spec.connection) {
    GradedMatrixForm a = spec.connection->eval(point, x);
    f += wedge_product(a, a);
  }
  if (spec.moment) f[0] += spec.moment(point, x);
  if (spec.one_form) {
    ExteriorElement dl = spec.one_form->equivariant(spec.action, point, x);
    f += it * GradedMatrixForm::from_scalar_form(spec.dim_plus, spec.dim_minus, dl);
  }
  return f;
}

inline ExteriorElement chern_form(const SuperconnectionSpec& spec, double t,
                                  const Vec& x, const Vec& point) {
  return supertrace_graded(super_exponential(assemble_curvature(spec, t, x, point)));
}

inline ExteriorElement transgression_form(const SuperconnectionSpec& spec, double t,
                                          const Vec& x, const Vec& point) {
  GradedMatrixForm ef = super_exponential(assemble_curvature(spec, t, x, point));
  const int n = spec.action.chart_dim;
  GradedMatrixForm w(spec.dim_plus, spec.dim_minus, n);
  if (spec.symbol) w += assemble_v_sigma(*spec.symbol, point, n);
  if (spec.one_form)
    w += grading_twist(GradedMatrixForm::from_scalar_form(
        spec.dim_plus, spec.dim_minus, spec.one_form->form(point)));
  ExteriorElement str = supertrace_graded(wedge_product(w, ef));
  return cplx(0.0, -1.0) * str;
}

// || (Ch(t+dt) - Ch(t-dt)) / 2dt + D(eta_t) ||
inline double transgression_identity_residual(const SuperconnectionSpec& spec, double t,
                                              const Vec& x, const Vec& point,
                                              double dt = 1e-4) {
  ExteriorElement dch = (chern_form(spec, t + dt, x, point) -
                         chern_form(spec, t - dt, x, point)) *
                        cplx(1.0 / (2.0 * dt));
  FormField eta;
  eta.eval = [&spec, t](const Vec& p, const Vec& xx) {
    ExteriorElement e = transgression_form(spec, t, xx, p);
    GradedMatrixForm w(1, 0, e.generators());
    for (unsigned m = 0; m < w.monomials(); ++m) w[m](0, 0) = e[m];
    return w;
  };
  GradedMatrixForm de = equivariant_differential(eta, spec.action, point, x);
  ExteriorElement res = dch;
  for (unsigned m = 0; m < de.monomials(); ++m) res[m] += de[m](0, 0);
  return res.norm();
}

inline ExteriorElement beta_truncated(const SuperconnectionSpec& spec, double tmax,
                                      const Vec& x, const Vec& point,
                                      double abs_tol = 1e-10) {
  if (tmax < 0.0) throw std::invalid_argument("beta_truncated: T must be >= 0");
  auto f = [&](double t) { return transgression_form(spec, t, x, point); };
  auto nrm = [](const ExteriorElement& e) { return e.norm(); };
  return adaptive_integrate<ExteriorElement>(f, 0.0, tmax, abs_tol, nrm);
}

// Decay gauge at a point: h_sigma + |f_lambda|^2.  Zero identifies the
// critical set C_{lambda,sigma}, where tail bounds are unavailable.
inline double decay_gauge(const SuperconnectionSpec& spec, const Vec& point) {
  double g = 0.0;
  bool have = false;
  if (spec.symbol) {
    g += h_sigma(*spec.symbol, point);
    have = true;
  }
  if (spec.one_form) {
    g += spec.one_form->moment(spec.action, point).squaredNorm();
    have = true;
  }
  return have ? g : 0.0;
}

// Adjust a spec for a shifted connection A -> A + a: the moment picks up
// -contraction(VX) a, exact for End-valued invariant one-forms a.
inline SuperconnectionSpec with_connection(SuperconnectionSpec spec, FormField a) {
  auto base_moment = spec.moment;
  auto action = spec.action;
  auto a_copy = a;
  spec.moment = [base_moment, action, a_copy](const Vec& p, const Vec& x) {
    Vec v = action.vector_field(p, x);
    GradedMatrixForm av = contraction(v, a_copy.eval(p, x));
    // contraction and the row-sign representation commute up to a sign
    // flip of the E- rows
    Matc m = -av[0];
    m.bottomRows(av.dim_minus()) *= -1.0;
    if (base_moment) m += base_moment(p, x);
    return m;
  };
  if (spec.connection) {
    FormField base = *spec.connection;
    FormField sum;
    sum.dim_plus = base.dim_plus;
    sum.dim_minus = base.dim_minus;
    sum.eval = [base, a_copy](const Vec& p, const Vec& x) {
      return base.eval(p, x) + a_copy.eval(p, x);
    };
    spec.connection = sum;
  } else {
    spec.connection = a_copy;
  }
  return spec;
}

}  // namespace eqf
