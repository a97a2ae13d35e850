#pragma once

// Single-chart group actions, form fields, and the equivariant differential
// D = d - contraction(V(X)).  Coefficient derivatives use central
// differences with one Richardson level unless an analytic partial is
// supplied; the exterior generators of a field are the chart differentials.

#include <Eigen/Dense>
#include <functional>

#include "eqforms/graded_matrix.hpp"

namespace eqf {

using Vec = Eigen::VectorXd;

struct ChartedAction {
  int chart_dim = 0;
  int lie_dim = 0;
  // generating vector field of Lie basis element a, at a chart point
  std::function<Vec(const Vec& point, int a)> generator;
  // Riemannian metric on the chart; identity when absent
  std::function<Eigen::MatrixXd(const Vec& point)> metric;

  Vec vector_field(const Vec& point, const Vec& x) const {
    Vec v = Vec::Zero(chart_dim);
    for (int a = 0; a < lie_dim; ++a)
      if (x(a) != 0.0) v += x(a) * generator(point, a);
    return v;
  }
  Eigen::MatrixXd metric_at(const Vec& point) const {
    if (metric) return metric(point);
    return Eigen::MatrixXd::Identity(chart_dim, chart_dim);
  }
};

struct FormField {
  int dim_plus = 1;
  int dim_minus = 0;
  std::function<GradedMatrixForm(const Vec& point, const Vec& x)> eval;
  // optional analytic partial derivative in chart direction i
  std::function<GradedMatrixForm(const Vec& point, const Vec& x, int i)> partial;
};

inline double fd_step(const Vec& point) { return 1e-5 * (1.0 + point.norm()); }

// d/dx_i of the coefficients, central difference with one Richardson level.
inline GradedMatrixForm field_partial(const FormField& f, const Vec& point,
                                      const Vec& x, int i) {
  if (f.partial) return f.partial(point, x, i);
  const double h = fd_step(point);
  auto central = [&](double hh) {
    Vec pp = point, pm = point;
    pp(i) += hh;
    pm(i) -= hh;
    return (f.eval(pp, x) - f.eval(pm, x)) * cplx(1.0 / (2.0 * hh));
  };
  GradedMatrixForm d1 = central(h);
  GradedMatrixForm d2 = central(0.5 * h);
  return (4.0 / 3.0) * d2 - (1.0 / 3.0) * d1;
}

// e_i ^ a, for a single chart differential.
inline GradedMatrixForm left_generator_wedge(int i, const GradedMatrixForm& a) {
  GradedMatrixForm out(a.dim_plus(), a.dim_minus(), a.generators());
  const unsigned bit = 1u << i;
  for (unsigned m = 0; m < a.monomials(); ++m) {
    if (m & bit) continue;
    if (a[m].isZero(0.0)) continue;
    out[m | bit] += double(koszul_sign(bit, m)) * a[m];
  }
  return out;
}

// contraction by a chart vector v
inline GradedMatrixForm contraction(const Vec& v, const GradedMatrixForm& a) {
  GradedMatrixForm out(a.dim_plus(), a.dim_minus(), a.generators());
  for (unsigned m = 1; m < a.monomials(); ++m) {
    if (a[m].isZero(0.0)) continue;
    int pos = 0;
    for (unsigned rest = m; rest; rest &= rest - 1, ++pos) {
      int j = __builtin_ctz(rest);
      if (v(j) == 0.0) continue;
      double sign = (pos & 1) ? -1.0 : 1.0;
      out[m & ~(1u << j)] += sign * v(j) * a[m];
    }
  }
  return out;
}

inline GradedMatrixForm exterior_derivative(const FormField& f, const Vec& point,
                                            const Vec& x) {
  GradedMatrixForm probe = f.eval(point, x);
  GradedMatrixForm out(probe.dim_plus(), probe.dim_minus(), probe.generators());
  for (int i = 0; i < int(point.size()); ++i)
    out += left_generator_wedge(i, field_partial(f, point, x, i));
  return out;
}

inline GradedMatrixForm equivariant_differential(const FormField& f,
                                                 const ChartedAction& action,
                                                 const Vec& point, const Vec& x) {
  GradedMatrixForm d = exterior_derivative(f, point, x);
  Vec v = action.vector_field(point, x);
  return d - contraction(v, f.eval(point, x));
}

// A scalar invariant one-form; entries live in 1 x 1 matrices.
struct InvariantOneForm {
  FormField field;  // X-independent degree-1 field

  ExteriorElement form(const Vec& point) const {
    return extract_scalar(field.eval(point, Vec::Zero(0)));
  }
  // moment: f_a = <lambda(point), V(point, e_a)>
  Vec moment(const ChartedAction& action, const Vec& point) const {
    ExteriorElement lam = form(point);
    Vec f = Vec::Zero(action.lie_dim);
    for (int a = 0; a < action.lie_dim; ++a) {
      Vec v = action.generator(point, a);
      double s_re = 0.0;
      for (int j = 0; j < action.chart_dim; ++j)
        s_re += std::real(lam[1u << j]) * v(j);
      f(a) = s_re;
    }
    return f;
  }
  ExteriorElement d(const Vec& point) const {
    return extract_scalar(exterior_derivative(field, point, Vec::Zero(0)));
  }
  // D(lambda)(X) = d(lambda) - <f_lambda, X>
  ExteriorElement equivariant(const ChartedAction& action, const Vec& point,
                              const Vec& x) const {
    ExteriorElement out = d(point);
    out[0] -= moment(action, point).dot(x);
    return out;
  }

  static ExteriorElement extract_scalar(const GradedMatrixForm& a) {
    if (a.dim() != 1)
      throw std::invalid_argument("InvariantOneForm: field must be scalar-valued");
    ExteriorElement e(a.generators());
    for (unsigned m = 0; m < a.monomials(); ++m) e[m] = a[m](0, 0);
    return e;
  }
};

inline Vec moment_of_one_form(const InvariantOneForm& lam, const ChartedAction& action,
                              const Vec& point) {
  return lam.moment(action, point);
}

// Cotangent lift of a charted action: chart (x, xi) of dimension 2m, with
// xi' = -(dV/dx)^T xi along the flow.
inline ChartedAction cotangent_lift(const ChartedAction& base) {
  ChartedAction out;
  const int m = base.chart_dim;
  out.chart_dim = 2 * m;
  out.lie_dim = base.lie_dim;
  out.generator = [base, m](const Vec& p, int a) {
    Vec x = p.head(m), xi = p.tail(m);
    Vec v = Vec::Zero(2 * m);
    v.head(m) = base.generator(x, a);
    const double h = fd_step(x);
    for (int i = 0; i < m; ++i) {
      Vec xp = x, xm = x;
      xp(i) += h;
      xm(i) -= h;
      Vec dvi = (base.generator(xp, a) - base.generator(xm, a)) / (2.0 * h);
      v(m + i) = -xi.dot(dvi);
    }
    return v;
  };
  return out;
}

// Liouville one-form on the cotangent chart: omega = -sum_a xi_a dx_a.
inline InvariantOneForm liouville_one_form(int base_dim) {
  InvariantOneForm lam;
  lam.field.eval = [base_dim](const Vec& p, const Vec&) {
    GradedMatrixForm a(1, 0, 2 * base_dim);
    for (int i = 0; i < base_dim; ++i)
      a[1u << i](0, 0) = -p(base_dim + i);
    return a;
  };
  lam.field.partial = [base_dim](const Vec&, const Vec&, int i) {
    GradedMatrixForm a(1, 0, 2 * base_dim);
    if (i >= base_dim) a[1u << (i - base_dim)](0, 0) = -1.0;
    return a;
  };
  return lam;
}

struct LiouvilleData {
  ChartedAction action;  // lifted action on the cotangent chart
  InvariantOneForm omega;
};

inline LiouvilleData liouville_data(const ChartedAction& base) {
  return {cotangent_lift(base), liouville_one_form(base.chart_dim)};
}

// Kirwan one-form: lambda = metric(k, .) with k(n) = V_n(Phi(n)).
inline InvariantOneForm kirwan_one_form(const ChartedAction& action,
                                        std::function<Vec(const Vec&)> moment_map) {
  InvariantOneForm lam;
  auto act = action;
  lam.field.eval = [act, moment_map](const Vec& p, const Vec&) {
    Vec k = act.vector_field(p, moment_map(p));
    Vec cov = act.metric_at(p) * k;
    GradedMatrixForm a(1, 0, act.chart_dim);
    for (int i = 0; i < act.chart_dim; ++i) a[1u << i](0, 0) = cov(i);
    return a;
  };
  return lam;
}

}  // namespace eqf
