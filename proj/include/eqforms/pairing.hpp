#pragma once

// Pairing of form families against test densities: iterated (t, X)
// quadrature, boundary-value distributions on the line, and the paired
// residuals of the localization and sum-of-one-forms identities.

#include "eqforms/chern.hpp"
#include "eqforms/density.hpp"

namespace eqf {

// Tensor-product Gauss integral of f(X) Q(X) over the support box of Q.
// The order doubles (up to cap) until two successive values agree to
// stab_tol in the supplied norm.
template <class V, class F, class Norm>
V pair_density(const F& f, const TestDensity& q, const Norm& nrm, int order = 64,
               double stab_tol = 1e-9, int cap = 512) {
  auto eval_at = [&](int n) {
    const QuadRule& g = gauss_legendre(n);
    V acc{};
    bool first = true;
    std::vector<int> idx(q.dim, 0);
    while (true) {
      Vec x = q.center;
      double w = 1.0;
      for (int d = 0; d < q.dim; ++d) {
        x(d) += q.radius * g.x[idx[d]];
        w *= q.radius * g.w[idx[d]];
      }
      double qx = q.eval(x);
      if (qx != 0.0) {
        V term = (w * qx) * f(x);
        if (first) {
          acc = term;
          first = false;
        } else {
          acc = acc + term;
        }
      }
      int d = 0;
      while (d < q.dim && ++idx[d] == n) idx[d++] = 0;
      if (d == q.dim) break;
    }
    return acc;
  };
  V val = eval_at(order);
  while (2 * order <= cap) {
    order *= 2;
    V next = eval_at(order);
    double diff = nrm(next + (-1.0) * val);
    val = next;
    if (diff <= stab_tol * (1.0 + nrm(val))) break;
  }
  return val;
}

inline cplx pair_density_scalar(const std::function<cplx(const Vec&)>& f,
                                const TestDensity& q, int order = 64,
                                double stab_tol = 1e-9, int cap = 512) {
  return pair_density<cplx>(f, q, [](cplx v) { return std::abs(v); }, order,
                            stab_tol, cap);
}

// \hat Q(t) by quadrature when no analytic transform is attached.
inline cplx density_fourier(const TestDensity& q, double t, int order = 200) {
  if (q.dim != 1) throw std::invalid_argument("density_fourier: need dim 1");
  if (q.fourier) return q.fourier(t);
  const QuadRule& g = gauss_legendre(order);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    double x = q.center(0) + q.radius * g.x[i];
    acc += q.radius * g.w[i] * q.at1(x) * std::exp(cplx(0.0, -t * x));
  }
  return acc;
}

struct PairedValue {
  ExteriorElement value;
  double truncation = 0.0;
  double tail_estimate = std::numeric_limits<double>::quiet_NaN();  // NaN: unavailable
};

// Iterated pairing  int_0^T int_k eta(t, X) Q(X) dX dt  at a fixed point.
// eta_family: (t, X) -> ExteriorElement.
inline PairedValue pair_family_with_density(
    const std::function<ExteriorElement(double, const Vec&)>& eta_family,
    const TestDensity& q, double tmax, int x_order = 64, double t_tol = 1e-10) {
  auto nrm = [](const ExteriorElement& e) { return e.norm(); };
  auto inner = [&](double t) {
    return pair_density<ExteriorElement>(
        [&](const Vec& x) { return eta_family(t, x); }, q, nrm, x_order);
  };
  PairedValue out;
  out.truncation = tmax;
  out.value = adaptive_integrate<ExteriorElement>(inner, 0.0, tmax, t_tol, nrm);
  return out;
}

// <1/(X +- i0), Q> both ways: principal value -+ i pi Q(0), and the
// one-sided Fourier integral -+ i int_0^inf \hat Q(-+ t) dt.
struct BoundaryValue {
  cplx pv_route;
  cplx fourier_route;
};

inline BoundaryValue boundary_value_pairing(const TestDensity& q, int sign) {
  if (q.dim != 1) throw std::invalid_argument("boundary_value_pairing: need dim 1");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("boundary_value_pairing: sign must be +-1");
  const double r = std::abs(q.center(0)) + q.radius;
  double pv = adaptive_integrate_scalar(
      [&](double x) { return (q.at1(x) - q.at1(-x)) / x; }, 0.0, r, 1e-12);
  BoundaryValue out;
  out.pv_route = pv - cplx(0.0, sign * M_PI) * q.at1(0.0);

  // Fourier route in blocks until the contribution is negligible; the
  // quadrature order tracks the phase t * radius.
  auto f = [&](double t) {
    return density_fourier(q, -sign * t, 200 + int(t * q.radius));
  };
  auto nrm = [](cplx v) { return std::abs(v); };
  cplx acc = 0.0;
  const double block = 50.0;
  for (int b = 0; b < 40; ++b) {
    cplx inc = adaptive_integrate<cplx>(f, b * block, (b + 1) * block, 1e-13, nrm);
    acc += inc;
    if (b > 0 && std::abs(inc) < 1e-13) break;
  }
  out.fourier_route = cplx(0.0, -double(sign)) * acc;
  return out;
}

// || int (D(beta_T(lambda))(X) - 1) Q(X) dX ||  for the trivial rank-1
// bundle with invariant one-form lambda, evaluated at a point off C_lambda.
inline double localization_residual(const ChartedAction& action,
                                    const InvariantOneForm& lambda,
                                    const TestDensity& q, double tmax,
                                    const Vec& point, int x_order = 64,
                                    double min_moment = 1e-6) {
  if (lambda.moment(action, point).norm() < min_moment)
    throw std::domain_error("localization_residual: point too close to C_lambda");
  SuperconnectionSpec spec;
  spec.dim_plus = 1;
  spec.dim_minus = 0;
  spec.action = action;
  spec.one_form = lambda;

  FormField beta_field;
  beta_field.eval = [&spec, tmax](const Vec& p, const Vec& x) {
    ExteriorElement b = beta_truncated(spec, tmax, x, p, 1e-9);
    GradedMatrixForm w(1, 0, b.generators());
    for (unsigned m = 0; m < w.monomials(); ++m) w[m](0, 0) = b[m];
    return w;
  };
  auto residual_at = [&](const Vec& x) {
    GradedMatrixForm db = equivariant_differential(beta_field, action, point, x);
    ExteriorElement e(db.generators());
    for (unsigned m = 0; m < db.monomials(); ++m) e[m] = db[m](0, 0);
    e[0] -= 1.0;
    return e;
  };
  auto nrm = [](const ExteriorElement& e) { return e.norm(); };
  ExteriorElement paired =
      pair_density<ExteriorElement>(residual_at, q, nrm, x_order, 1e-9, 4 * x_order);
  return paired.norm();
}

// Paired residual of the sum-of-one-forms identity on a K1 x K2 chart:
// region 1:  D(I1) - beta_S(lambda+mu) + beta_S(lambda)
// region 2:  D(I2) + beta_S(lambda+mu) - beta_S(mu)
// with I1 = double integral of eta_lambda(s) ^ eta_mu(t) over 0<=t<=s<=S and
// I2 over 0<=s<=t<=S.
inline double one_form_sum_identity_residual(
    const ChartedAction& action, const InvariantOneForm& lambda,
    const InvariantOneForm& mu, const TestDensity& q, double smax, const Vec& point,
    int region, int x_order = 24, int s_order = 64, int u_order = 32) {
  if (region != 1 && region != 2)
    throw std::invalid_argument("one_form_sum_identity_residual: region must be 1 or 2");

  auto make_spec = [&](const InvariantOneForm& l) {
    SuperconnectionSpec s;
    s.dim_plus = 1;
    s.dim_minus = 0;
    s.action = action;
    s.one_form = l;
    return s;
  };
  InvariantOneForm sum;
  {
    FormField f1 = lambda.field, f2 = mu.field;
    sum.field.eval = [f1, f2](const Vec& p, const Vec& x) {
      return f1.eval(p, x) + f2.eval(p, x);
    };
    if (f1.partial && f2.partial)
      sum.field.partial = [f1, f2](const Vec& p, const Vec& x, int i) {
        return f1.partial(p, x, i) + f2.partial(p, x, i);
      };
  }
  SuperconnectionSpec spec1 = make_spec(lambda), spec2 = make_spec(mu),
                      spec12 = make_spec(sum);

  const QuadRule& gs = gauss_legendre(s_order);
  const QuadRule& gu = gauss_legendre(u_order);

  FormField ifield;
  ifield.eval = [&](const Vec& p, const Vec& x) {
    ExteriorElement acc(action.chart_dim);
    for (std::size_t i = 0; i < gs.x.size(); ++i) {
      double s = 0.5 * smax * (gs.x[i] + 1.0);
      double ws = 0.5 * smax * gs.w[i];
      ExteriorElement eta_s = (region == 1) ? transgression_form(spec1, s, x, p)
                                            : transgression_form(spec2, s, x, p);
      ExteriorElement inner(action.chart_dim);
      for (std::size_t j = 0; j < gu.x.size(); ++j) {
        double u = 0.5 * (gu.x[j] + 1.0);
        double wu = 0.5 * gu.w[j];
        double t = u * s;
        ExteriorElement eta_t = (region == 1) ? transgression_form(spec2, t, x, p)
                                              : transgression_form(spec1, t, x, p);
        inner += wu * eta_t;
      }
      // region 1: I1 = int eta_lambda(s) ^ eta_mu(t<=s);
      // region 2: I2 = int eta_lambda(s<=t) ^ eta_mu(t), outer variable t
      if (region == 1)
        acc += (ws * s) * wedge(eta_s, inner);
      else
        acc += (ws * s) * wedge(inner, eta_s);
    }
    GradedMatrixForm w(1, 0, acc.generators());
    for (unsigned m = 0; m < w.monomials(); ++m) w[m](0, 0) = acc[m];
    return w;
  };

  auto residual_at = [&](const Vec& x) {
    GradedMatrixForm di = equivariant_differential(ifield, action, point, x);
    ExteriorElement e(di.generators());
    for (unsigned m = 0; m < di.monomials(); ++m) e[m] = di[m](0, 0);
    ExteriorElement b12 = beta_truncated(spec12, smax, x, point, 1e-9);
    if (region == 1) {
      e -= b12;
      e += beta_truncated(spec1, smax, x, point, 1e-9);
    } else {
      e += b12;
      e -= beta_truncated(spec2, smax, x, point, 1e-9);
    }
    return e;
  };
  auto nrm = [](const ExteriorElement& e) { return e.norm(); };
  ExteriorElement paired =
      pair_density<ExteriorElement>(residual_at, q, nrm, x_order, 1e-9, x_order);
  return paired.norm();
}

}  // namespace eqf
