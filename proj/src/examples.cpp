#include "eqforms/examples.hpp"

#include "eqforms/pairing.hpp"

namespace eqf {

namespace {

ExteriorElement ee4(unsigned mask, cplx v) { return ExteriorElement::monomial(4, mask, v); }

// generator order on the atiyah chart: x1, y1, x2, y2
ExteriorElement dz1_form() {
  ExteriorElement e(4);
  e[1u << 2] = 1.0;             // dx2
  e[1u << 1] = 1.0;             // dy1
  e[1u << 3] = cplx(0.0, 1.0);  // i dy2
  e[1u << 0] = cplx(0.0, -1.0); // -i dx1
  return e;
}
ExteriorElement dz1_bar_form() {
  ExteriorElement e(4);
  e[1u << 2] = 1.0;
  e[1u << 1] = 1.0;
  e[1u << 3] = cplx(0.0, -1.0);
  e[1u << 0] = cplx(0.0, 1.0);
  return e;
}
cplx z1_at(const Vec& p) { return cplx(p(2) + p(1), p(3) - p(0)); }

ExteriorElement atiyah_lambda_form(const Vec& p) {
  // lambda = Re(xi2 d xi1-bar) = x2 dx1 + y2 dy1
  ExteriorElement e(4);
  e[1u << 0] = p(2);
  e[1u << 1] = p(3);
  return e;
}

ExteriorElement atiyah_d_lambda_equivariant(const Vec& p, const Vec& x) {
  // d lambda = dx2 ^ dx1 + dy2 ^ dy1; degree-0 part X Im(xi2 xi1-bar)
  ExteriorElement e(4);
  e[(1u << 0) | (1u << 2)] = -1.0;
  e[(1u << 1) | (1u << 3)] = -1.0;
  e[0] = x(0) * (p(3) * p(0) - p(2) * p(1));
  return e;
}

}  // namespace

cplx atiyah_g(cplx z) {
  if (std::abs(z) < 1e-6) return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
  return (std::exp(z) - 1.0) / z;
}
cplx atiyah_g_prime(cplx z) {
  if (std::abs(z) < 1e-4)
    return 0.5 + z / 3.0 + z * z / 8.0 + z * z * z / 30.0;
  return (std::exp(z) * (z - 1.0) + 1.0) / (z * z);
}

ExteriorElement exp_scalar_form(const ExteriorElement& w) {
  ExteriorElement n = w;
  cplx s = w[0];
  n[0] = 0.0;
  ExteriorElement out = ExteriorElement::scalar(w.generators(), 1.0);
  ExteriorElement pw = ExteriorElement::scalar(w.generators(), 1.0);
  double fact = 1.0;
  for (int k = 1; k <= w.generators(); ++k) {
    pw = wedge(pw, n);
    fact *= k;
    out += (1.0 / fact) * pw;
  }
  return std::exp(s) * out;
}

ExampleCase plane_rotation_case() {
  ExampleCase c;
  c.name = "plane_rotation";
  c.action.chart_dim = 2;
  c.action.lie_dim = 1;
  c.action.generator = [](const Vec& p, int) { return Vec{{p(1), -p(0)}}; };

  InvariantOneForm lam;
  lam.field.eval = [](const Vec& p, const Vec&) {
    GradedMatrixForm a(1, 0, 2);
    a[1](0, 0) = -p(1);  // dx coefficient
    a[2](0, 0) = p(0);   // dy coefficient
    return a;
  };
  lam.field.partial = [](const Vec&, const Vec&, int i) {
    GradedMatrixForm a(1, 0, 2);
    if (i == 0) a[2](0, 0) = 1.0;
    if (i == 1) a[1](0, 0) = -1.0;
    return a;
  };

  c.spec.dim_plus = 1;
  c.spec.dim_minus = 0;
  c.spec.action = c.action;
  c.spec.one_form = lam;

  c.sample_points = {Vec{{1.0, 0.0}}, Vec{{0.0, 1.0}}, Vec{{0.7, -0.4}},
                     Vec{{-1.2, 0.5}}};
  c.sample_lie = {Vec::Constant(1, 0.7), Vec::Constant(1, -0.3),
                  Vec::Constant(1, 1.5)};
  c.sample_t = {0.5, 1.0, 2.0};

  c.oracle_d_lambda = [](const Vec& p, const Vec& x) {
    ExteriorElement e(2);
    e[3] = 2.0;
    e[0] = x(0) * (p(0) * p(0) + p(1) * p(1));
    return e;
  };
  c.oracle_beta_coefficient = [](const Vec& p) {
    double r2 = p.squaredNorm();
    ExteriorElement e(2);
    e[1] = -p(1) / r2;
    e[2] = p(0) / r2;
    return e;
  };
  c.oracle_beta_sign = [](const Vec&) { return +1; };
  return c;
}

ExampleCase cotangent_circle_case() {
  ExampleCase c;
  c.name = "cotangent_circle";
  c.action.chart_dim = 2;  // (theta, xi)
  c.action.lie_dim = 1;
  c.action.generator = [](const Vec&, int) { return Vec{{-1.0, 0.0}}; };

  InvariantOneForm lam;
  lam.field.eval = [](const Vec& p, const Vec&) {
    GradedMatrixForm a(1, 0, 2);
    a[1](0, 0) = -p(1);  // -xi d theta
    return a;
  };
  lam.field.partial = [](const Vec&, const Vec&, int i) {
    GradedMatrixForm a(1, 0, 2);
    if (i == 1) a[1](0, 0) = -1.0;
    return a;
  };

  c.spec.dim_plus = 1;
  c.spec.dim_minus = 0;
  c.spec.action = c.action;
  c.spec.one_form = lam;

  c.sample_points = {Vec{{0.3, 1.0}}, Vec{{1.2, 2.0}}, Vec{{-0.5, -1.0}}};
  c.sample_lie = {Vec::Constant(1, 1.0), Vec::Constant(1, -0.8),
                  Vec::Constant(1, 0.4)};
  c.sample_t = {0.5, 1.0, 2.0};

  c.oracle_d_lambda = [](const Vec& p, const Vec& x) {
    ExteriorElement e(2);
    e[3] = 1.0;
    e[0] = -x(0) * p(1);
    return e;
  };
  c.oracle_beta_coefficient = [](const Vec&) {
    ExteriorElement e(2);
    e[1] = 1.0;  // d theta
    return e;
  };
  c.oracle_beta_sign = [](const Vec& p) { return p(1) > 0.0 ? -1 : +1; };
  return c;
}

ExampleCase atiyah_case() {
  ExampleCase c;
  c.name = "atiyah";
  c.action.chart_dim = 4;  // (x1, y1, x2, y2)
  c.action.lie_dim = 1;
  c.action.generator = [](const Vec& p, int) {
    return Vec{{p(1), -p(0), p(3), -p(2)}};
  };

  InvariantOneForm lam;
  lam.field.eval = [](const Vec& p, const Vec&) {
    GradedMatrixForm a(1, 0, 4);
    a[1u << 0](0, 0) = p(2);
    a[1u << 1](0, 0) = p(3);
    return a;
  };
  lam.field.partial = [](const Vec&, const Vec&, int i) {
    GradedMatrixForm a(1, 0, 4);
    if (i == 2) a[1u << 0](0, 0) = 1.0;
    if (i == 3) a[1u << 1](0, 0) = 1.0;
    return a;
  };

  SymbolMorphism sym;
  sym.dim_plus = 1;
  sym.dim_minus = 1;
  sym.eval = [](const Vec& p) {
    Matc s(1, 1);
    s(0, 0) = z1_at(p);  // sigma = xi2 - i xi1
    return s;
  };
  sym.partial = [](const Vec&, int i) {
    Matc s(1, 1);
    const cplx d[4] = {cplx(0.0, -1.0), 1.0, 1.0, cplx(0.0, 1.0)};
    s(0, 0) = d[i];
    return s;
  };

  c.spec.dim_plus = 1;
  c.spec.dim_minus = 1;
  c.spec.action = c.action;
  c.spec.symbol = sym;
  c.spec.one_form = lam;
  c.spec.moment = [](const Vec&, const Vec& x) {
    Matc m = Matc::Zero(2, 2);
    m(1, 1) = cplx(0.0, x(0));  // fiber weights (0, 1)
    return m;
  };

  c.sample_points = {Vec{{0.5, -0.2, 0.3, 0.8}}, Vec{{1.0, 0.0, 0.0, 0.5}},
                     Vec{{-0.4, 0.6, 1.1, -0.3}}};
  c.sample_lie = {Vec::Constant(1, 0.3), Vec::Constant(1, 1.0),
                  Vec::Constant(1, -0.6)};
  c.sample_t = {0.5, 1.0, 1.7};

  c.oracle_d_lambda = atiyah_d_lambda_equivariant;

  c.oracle_exp_curvature = [](double t, const Vec& x, const Vec& p) {
    const cplx z = cplx(0.0, x(0));  // i theta
    const cplx g = atiyah_g(z), gp = atiyah_g_prime(z);
    const double h = std::norm(z1_at(p));
    const double e0 = std::exp(-t * t * h);
    ExteriorElement dz = dz1_form(), dzb = dz1_bar_form();
    ExteriorElement dzdzb = wedge(dz, dzb);
    GradedMatrixForm out(1, 1, 4);
    ExteriorElement a11 = ExteriorElement::scalar(4, 1.0) + (t * t) * (gp - g) * dzdzb;
    ExteriorElement a22 =
        ExteriorElement::scalar(4, std::exp(z)) + (t * t) * gp * dzdzb;
    ExteriorElement a12 = cplx(0.0, t) * g * dzb;
    ExteriorElement a21 = cplx(0.0, -t) * g * dz;
    for (unsigned m = 0; m < out.monomials(); ++m) {
      out[m](0, 0) = e0 * a11[m];
      out[m](0, 1) = e0 * a12[m];
      out[m](1, 0) = e0 * a21[m];
      out[m](1, 1) = e0 * a22[m];
    }
    return out;
  };

  c.oracle_transgression = [](double t, const Vec& x, const Vec& p) {
    const cplx z = cplx(0.0, x(0));
    const cplx g = atiyah_g(z);
    const cplx z1 = z1_at(p);
    const double h = std::norm(z1);
    const double e0 = std::exp(-t * t * h);
    ExteriorElement dz = dz1_form(), dzb = dz1_bar_form();
    ExteriorElement str_v = t * g * (z1 * dzb - std::conj(z1) * dz);
    ExteriorElement str_e = ExteriorElement::scalar(4, 1.0 - std::exp(z)) -
                            (t * t) * g * wedge(dz, dzb);
    ExteriorElement lam = atiyah_lambda_form(p);
    ExteriorElement inner = str_v - cplx(0.0, 1.0) * wedge(lam, str_e);
    ExteriorElement phase =
        exp_scalar_form(cplx(0.0, t) * atiyah_d_lambda_equivariant(p, x));
    return e0 * wedge(phase, inner);
  };
  return c;
}

double atiyah_inequality_margin(const Vec& p) {
  double h = std::norm(z1_at(p));
  double f = p(3) * p(0) - p(2) * p(1);  // Im(xi2 xi1-bar)
  return h + f * f - 0.5 * p.squaredNorm();
}

ExactSymplecticCase exact_symplectic_case() {
  ExactSymplecticCase c;
  c.action.chart_dim = 2;
  c.action.lie_dim = 1;
  c.action.generator = [](const Vec& p, int) { return Vec{{p(1), -p(0)}}; };
  c.action.metric = [](const Vec&) { return Eigen::MatrixXd::Identity(2, 2); };

  c.omega.field.eval = [](const Vec& p, const Vec&) {
    GradedMatrixForm a(1, 0, 2);
    a[1](0, 0) = -0.5 * p(1);
    a[2](0, 0) = 0.5 * p(0);
    return a;
  };
  c.omega.field.partial = [](const Vec&, const Vec&, int i) {
    GradedMatrixForm a(1, 0, 2);
    if (i == 0) a[2](0, 0) = 0.5;
    if (i == 1) a[1](0, 0) = -0.5;
    return a;
  };
  c.phi = [](const Vec& p) { return Vec::Constant(1, 0.5 * p.squaredNorm()); };
  c.kirwan = kirwan_one_form(c.action, c.phi);
  c.theta_weights = {1.0};
  return c;
}

std::vector<DecayRow> mean_decay_profile(const TestDensity& q,
                                         const std::vector<double>& radii, int axis,
                                         double min_radius_fitted, int x_order) {
  ExampleCase c = atiyah_case();
  std::vector<DecayRow> out;
  auto nrm = [](const ExteriorElement& e) { return e.norm(); };
  for (double r : radii) {
    Vec p(4);
    if (axis == 0)
      p << 0.0, -0.5 * r, 0.5 * r, 0.0;  // z1 = 0, z2 = r
    else
      p << 0.0, 0.0, r, 0.0;  // z1 = z2 = r, constant phase
    ExteriorElement paired = pair_density<ExteriorElement>(
        [&](const Vec& x) { return chern_form(c.spec, 1.0, x, p); }, q, nrm,
        x_order, 1e-9, 2 * x_order);
    out.push_back({r, paired.norm(), r >= min_radius_fitted});
  }
  return out;
}

}  // namespace eqf
