#include "eqforms/checks.hpp"

#include <chrono>
#include <memory>
#include <random>

#include "eqforms/examples.hpp"
#include "eqforms/relative.hpp"
#include "eqforms/theta.hpp"

namespace eqf {

namespace {

// Reference routes used only for cross-checking the engine inside the check
// harness: permutation-sorted wedge and the exponential of the
// left-multiplication operator on the full algebra.

int permutation_sign(unsigned ma, unsigned mb) {
  if (ma & mb) return 0;
  std::vector<int> idx;
  for (int b = 0; b < 8; ++b)
    if (ma & (1u << b)) idx.push_back(b);
  for (int b = 0; b < 8; ++b)
    if (mb & (1u << b)) idx.push_back(b);
  int sign = 1;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  return sign;
}

GradedMatrixForm wedge_sorted(const GradedMatrixForm& a, const GradedMatrixForm& b) {
  GradedMatrixForm out(a.dim_plus(), a.dim_minus(), a.generators());
  for (unsigned ma = 0; ma < a.monomials(); ++ma)
    for (unsigned mb = 0; mb < b.monomials(); ++mb) {
      int s = permutation_sign(ma, mb);
      if (s) out[ma | mb] += double(s) * (a[ma] * b[mb]);
    }
  return out;
}

GradedMatrixForm exp_left_multiplication(const GradedMatrixForm& a) {
  const int n = a.dim();
  const unsigned mm = unsigned(a.monomials());
  Matc l = Matc::Zero(mm * n, mm * n);
  for (unsigned ma = 0; ma < mm; ++ma)
    for (unsigned mb = 0; mb < mm; ++mb) {
      int s = permutation_sign(ma, mb);
      if (s) l.block((ma | mb) * n, mb * n, n, n) += double(s) * a[ma];
    }
  Matc e = l.exp();
  GradedMatrixForm out(a.dim_plus(), a.dim_minus(), a.generators());
  for (unsigned m = 0; m < mm; ++m) out[m] = e.block(m * n, 0, n, n);
  return out;
}

Matc random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> d;
  Matc m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(d(rng), d(rng));
  return m;
}

GradedMatrixForm random_graded(std::mt19937_64& rng, int p, int q, int gens) {
  GradedMatrixForm a(p, q, gens);
  for (unsigned m = 0; m < a.monomials(); ++m) a[m] = random_matrix(rng, p + q);
  return a;
}

// Homogeneous in exterior-degree parity and block parity separately.
GradedMatrixForm random_bihomogeneous(std::mt19937_64& rng, int p, int q, int gens,
                                      int ext_par, int block_par) {
  GradedMatrixForm a = random_graded(rng, p, q, gens);
  for (unsigned m = 0; m < a.monomials(); ++m) {
    int deg = __builtin_popcount(m) % 2;
    for (int i = 0; i < p + q; ++i)
      for (int j = 0; j < p + q; ++j) {
        int bp = ((i >= p) + (j >= p)) % 2;
        if (deg != ext_par || bp != block_par) a[m](i, j) = 0.0;
      }
  }
  return a;
}

double rel_err(const GradedMatrixForm& got, const GradedMatrixForm& want) {
  double num = 0.0, den = 0.0;
  for (unsigned m = 0; m < got.monomials(); ++m) {
    num += (got[m] - want[m]).norm();
    den += want[m].norm();
  }
  return num / std::max(den, 1e-300);
}

CheckRecord make_record(const CheckContext& ctx, double residual, double tolerance) {
  CheckRecord r;
  r.residual = residual;
  r.tolerance = tolerance * ctx.tol_scale;
  r.pass = residual <= r.tolerance;
  return r;
}

FormField scalar_field(
    int gens, std::function<ExteriorElement(const Vec&, const Vec&)> f) {
  FormField out;
  out.eval = [gens, f](const Vec& p, const Vec& x) {
    ExteriorElement e = f(p, x);
    GradedMatrixForm w(1, 0, gens);
    for (unsigned m = 0; m < w.monomials(); ++m) w[m](0, 0) = e[m];
    return w;
  };
  return out;
}

ExteriorElement extract_scalar(const GradedMatrixForm& a) {
  ExteriorElement e(a.generators());
  for (unsigned m = 0; m < a.monomials(); ++m) e[m] = a[m](0, 0);
  return e;
}

// ---- individual checks ----

CheckRecord run_algebra_laws(const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed * 1000003 + 1);
  double worst = 0.0;
  const int iters = ctx.grid > 0 ? ctx.grid : 1000;
  for (int it = 0; it < iters; ++it) {
    int gens = 1 + int(rng() % 4);
    int p = 1 + int(rng() % 2), q = int(rng() % 3);
    GradedMatrixForm a = random_graded(rng, p, q, gens);
    GradedMatrixForm b = random_graded(rng, p, q, gens);
    GradedMatrixForm c = random_graded(rng, p, q, gens);
    double scale = 1.0 + graded_norm(a) * graded_norm(b) * (1.0 + graded_norm(c));

    GradedMatrixForm id = GradedMatrixForm::identity(p, q, gens);
    worst = std::max(worst, graded_norm(wedge_product(id, a) - a) / scale);
    worst = std::max(worst, graded_norm(wedge_product(a, id) - a) / scale);
    worst = std::max(
        worst, graded_norm(wedge_product(a, b) - wedge_sorted(a, b)) / scale);
    worst = std::max(worst, graded_norm(wedge_product(wedge_product(a, b), c) -
                                        wedge_product(a, wedge_product(b, c))) /
                                scale);
    double sub = graded_norm(wedge_product(a, b)) - graded_norm(a) * graded_norm(b);
    worst = std::max(worst, sub / scale);

    // Str(ab) = (-1)^{da db + |A||B|} Str(ba) for elements homogeneous in
    // exterior degree and block parity separately
    int ea = int(rng() % 2), eb = int(rng() % 2);
    int ka = int(rng() % 2), kb = int(rng() % 2);
    GradedMatrixForm ha = random_bihomogeneous(rng, p, q, gens, ea, ka);
    GradedMatrixForm hb = random_bihomogeneous(rng, p, q, gens, eb, kb);
    double sign = ((ea * eb + ka * kb) % 2) ? -1.0 : 1.0;
    ExteriorElement cyc = supertrace(wedge_product(ha, hb)) -
                          sign * supertrace(wedge_product(hb, ha));
    worst = std::max(
        worst, cyc.norm() / (1.0 + graded_norm(ha) * graded_norm(hb)));
  }
  return make_record(ctx, worst, 1e-12);
}

CheckRecord run_volterra_exponential(const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed * 1000003 + 2);
  double worst = 0.0;
  const int iters = ctx.grid > 0 ? ctx.grid : 200;
  for (int it = 0; it < iters; ++it) {
    int gens = 1 + int(rng() % 4);
    int p = 1 + int(rng() % 3), q = int(rng() % 3);
    if (p + q > 3) q = 0;
    GradedMatrixForm a = random_graded(rng, p, q, gens);
    worst = std::max(worst, rel_err(super_exponential(a), exp_left_multiplication(a)));
  }
  return make_record(ctx, worst, 1e-9);
}

CheckRecord run_volterra_norm_bound(const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed * 1000003 + 3);
  std::normal_distribution<double> d;
  double worst = 0.0;
  const int iters = ctx.grid > 0 ? ctx.grid : 1000;
  for (int it = 0; it < iters; ++it) {
    int gens = 1 + int(rng() % 3);
    int n = 2 + int(rng() % 2);
    Matc u = random_matrix(rng, n);
    Eigen::HouseholderQR<Matc> qr(u);
    Matc qm = qr.householderQ();
    Eigen::VectorXd rd(n), sd(n);
    for (int i = 0; i < n; ++i) {
      rd(i) = std::abs(d(rng));
      sd(i) = d(rng);
    }
    Matc r = qm * rd.cast<cplx>().asDiagonal() * qm.adjoint();
    Matc s = qm * (cplx(0.0, 1.0) * sd.cast<cplx>()).asDiagonal() * qm.adjoint();
    GradedMatrixForm t(n - 1, 1, gens);
    for (unsigned m = 1; m < t.monomials(); ++m) t[m] = 0.5 * random_matrix(rng, n);
    GradedMatrixForm a = t;
    a[0] = -r + s;
    double lhs = graded_norm(super_exponential(a));
    double rhs = volterra_norm_bound(r, s, t);
    worst = std::max(worst, (lhs - rhs) / rhs);
  }
  return make_record(ctx, std::max(worst, 0.0), 1e-9);
}

CheckRecord run_moment_closed_form(const CheckContext& ctx,
                                   const ExampleCase& c,
                                   const std::vector<Vec>& points) {
  double worst = 0.0;
  for (const Vec& p : points)
    for (const Vec& x : c.sample_lie) {
      ExteriorElement got = c.spec.one_form->equivariant(c.action, p, x);
      worst = std::max(worst, (got - c.oracle_d_lambda(p, x)).norm());
    }
  return make_record(ctx, worst, 1e-12);
}

std::vector<Vec> grid_points_2d(int g, double lo, double hi) {
  std::vector<Vec> pts;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      pts.push_back(Vec{{lo + (hi - lo) * i / (g - 1.0),
                         lo + (hi - lo) * j / (g - 1.0)}});
  return pts;
}

CheckRecord run_moment_rotation(const CheckContext& ctx) {
  int g = ctx.grid > 0 ? ctx.grid : 7;
  return run_moment_closed_form(ctx, plane_rotation_case(),
                                grid_points_2d(g, -1.5, 1.5));
}

CheckRecord run_moment_circle(const CheckContext& ctx) {
  int g = ctx.grid > 0 ? ctx.grid : 7;
  return run_moment_closed_form(ctx, cotangent_circle_case(),
                                grid_points_2d(g, -2.0, 2.0));
}

CheckRecord run_curvature_exponential(const CheckContext& ctx) {
  ExampleCase c = atiyah_case();
  SuperconnectionSpec bare = c.spec;
  bare.one_form.reset();  // the closed form is for the lambda-free curvature
  double worst = 0.0;
  for (double t : c.sample_t)
    for (const Vec& x : c.sample_lie)
      for (const Vec& p : c.sample_points) {
        GradedMatrixForm got = super_exponential(assemble_curvature(bare, t, x, p));
        GradedMatrixForm want = c.oracle_exp_curvature(t, x, p);
        for (unsigned m = 0; m < got.monomials(); ++m)
          worst = std::max(worst, (got[m] - want[m]).cwiseAbs().maxCoeff());
      }
  return make_record(ctx, worst, 1e-10);
}

CheckRecord run_transgression_identity(const CheckContext& ctx) {
  double worst = 0.0;
  for (const ExampleCase& c :
       {plane_rotation_case(), cotangent_circle_case(), atiyah_case()})
    for (const Vec& p : c.sample_points)
      for (const Vec& x : c.sample_lie)
        for (double t : c.sample_t)
          worst = std::max(worst,
                           transgression_identity_residual(c.spec, t, x, p, 1e-4));
  return make_record(ctx, worst, 1e-6);
}

CheckRecord run_localization(const CheckContext& ctx,
                             const ExampleCase& c, const Vec& point) {
  TestDensity q = bump_density(Vec::Zero(1), 1.5, 2);
  std::vector<double> schedule = {0.25 * ctx.T, 0.5 * ctx.T, ctx.T};
  std::vector<double> res;
  for (double t : schedule)
    res.push_back(localization_residual(c.action, *c.spec.one_form, q, t, point));
  CheckRecord r = make_record(ctx, res.back(), 1e-4);
  for (std::size_t i = 1; i < res.size(); ++i)
    if (res[i] >= res[i - 1]) r.pass = false;  // must decrease with T
  return r;
}

CheckRecord run_localization_rotation(const CheckContext& ctx) {
  return run_localization(ctx, plane_rotation_case(), Vec{{1.3, 0.6}});
}

CheckRecord run_localization_circle(const CheckContext& ctx) {
  return run_localization(ctx, cotangent_circle_case(), Vec{{0.4, 2.0}});
}

CheckRecord run_multiplicativity(const CheckContext& ctx) {
  const double T = ctx.T;
  SuperconnectionSpec spec1 = plane_rotation_case().spec;
  const ChartedAction action = spec1.action;

  SymbolMorphism sym;
  sym.dim_plus = 1;
  sym.dim_minus = 1;
  sym.eval = [](const Vec& p) {
    Matc s(1, 1);
    s(0, 0) = cplx(p(0), p(1));
    return s;
  };
  sym.partial = [](const Vec&, int i) {
    Matc s(1, 1);
    s(0, 0) = (i == 0) ? cplx(1.0) : cplx(0.0, 1.0);
    return s;
  };
  SuperconnectionSpec spec2;
  spec2.dim_plus = 1;
  spec2.dim_minus = 1;
  spec2.action = action;
  spec2.symbol = sym;
  spec2.moment = [](const Vec&, const Vec& x) {
    Matc m = Matc::Zero(2, 2);
    m(1, 1) = cplx(0.0, x(0));
    return m;
  };

  PartitionPair part;
  part.d1 = [](const Vec& p) { return p.squaredNorm() - 0.4; };
  part.d2 = [](const Vec& p) { return 1.6 - p.squaredNorm(); };

  const Vec point{{1.0, 0.0}};
  TestDensity q = bump_density(Vec::Zero(1), 1.5, 2);

  const QuadRule& gs = gauss_legendre(48);
  const QuadRule& gu = gauss_legendre(24);

  auto eta1 = [&](double t, const Vec& x, const Vec& p) {
    return transgression_form(spec1, t, x, p);
  };
  auto eta2 = [&](double t, const Vec& x, const Vec& p) {
    return transgression_form(spec2, t, x, p);
  };

  // I1 = double integral of eta1(s) ^ eta2(t) over 0 <= t <= s <= T,
  // I2 = the same integrand over 0 <= s <= t <= T.
  auto iterated = [&](int which, const Vec& p, const Vec& x) {
    ExteriorElement acc(2);
    for (std::size_t i = 0; i < gs.x.size(); ++i) {
      double outer = 0.5 * T * (gs.x[i] + 1.0);
      double wo = 0.5 * T * gs.w[i];
      ExteriorElement inner(2);
      for (std::size_t j = 0; j < gu.x.size(); ++j) {
        double u = 0.5 * (gu.x[j] + 1.0);
        double wu = 0.5 * gu.w[j];
        inner += (which == 1) ? wu * eta2(u * outer, x, p)
                              : wu * eta1(u * outer, x, p);
      }
      if (which == 1)
        acc += (wo * outer) * wedge(eta1(outer, x, p), inner);
      else
        acc += (wo * outer) * wedge(inner, eta2(outer, x, p));
    }
    return acc;
  };

  FormField iphi = scalar_field(2, [&](const Vec& p, const Vec& x) {
    return part.phi1(p) * iterated(1, p, x) - part.phi2(p) * iterated(2, p, x);
  });

  auto phi1_fn = [&part](const Vec& p) { return part.phi1(p); };
  auto residual_at = [&](const Vec& x) {
    ExteriorElement di =
        extract_scalar(equivariant_differential(iphi, action, point, x));
    ExteriorElement b1 = beta_truncated(spec1, T, x, point, 1e-8);
    ExteriorElement b2 = beta_truncated(spec2, T, x, point, 1e-8);
    auto eta12 = [&](double t) {
      return wedge(eta1(t, x, point), chern_form(spec2, t, x, point)) +
             wedge(chern_form(spec1, t, x, point), eta2(t, x, point));
    };
    auto nrm = [](const ExteriorElement& e) { return e.norm(); };
    ExteriorElement b12 = adaptive_integrate<ExteriorElement>(eta12, 0.0, T, 1e-8, nrm);
    ExteriorElement c10 = chern_form(spec1, 0.0, x, point);
    ExteriorElement c20 = chern_form(spec2, 0.0, x, point);
    ExteriorElement dphi1 = d_scalar(phi1_fn, point, 2);
    ExteriorElement rhs = part.phi1(point) * wedge(b1, c20);
    rhs += part.phi2(point) * wedge(c10, b2);
    rhs -= wedge(dphi1, wedge(b1, b2));
    rhs -= b12;
    return di + rhs;  // -D(I_Phi) = rhs, so the residual is D(I_Phi) + rhs
  };

  auto nrm = [](const ExteriorElement& e) { return e.norm(); };
  ExteriorElement paired = pair_density<ExteriorElement>(residual_at, q, nrm, 96, 1e-9, 96);
  return make_record(ctx, paired.norm(), 1e-3);
}

CheckRecord run_ellipticity_inequality(const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed * 1000003 + 4);
  std::normal_distribution<double> d;
  std::uniform_real_distribution<double> u(2.0, 100.0);
  double min_margin = std::numeric_limits<double>::infinity();
  const int iters = ctx.grid > 0 ? ctx.grid : 10000;
  for (int it = 0; it < iters; ++it) {
    Vec p(4);
    for (int i = 0; i < 4; ++i) p(i) = d(rng);
    p *= std::sqrt(u(rng)) / p.norm();
    min_margin = std::min(min_margin, atiyah_inequality_margin(p));
  }
  return make_record(ctx, std::max(0.0, -min_margin), 0.0);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i)
    out.push_back(lo * std::pow(hi / lo, i / (n - 1.0)));
  return out;
}

CheckRecord run_decay_profile(const CheckContext& ctx) {
  std::vector<DecayPoint> rows = decay_table_oscillatory(ctx.grid > 0 ? ctx.grid : 15);
  double hi = rows.back().t_or_radius;
  FitResult fit = fit_decay_exponent(rows, hi / 10.0, hi);
  CheckRecord r = make_record(ctx, fit.exponent, -6.0);
  r.tolerance = -6.0;  // decay order threshold, not scaled
  r.pass = fit.exponent <= r.tolerance;
  return r;
}

CheckRecord run_decay_gaussian(const CheckContext& ctx) {
  std::vector<DecayPoint> rows = decay_table_gaussian(ctx.grid > 0 ? ctx.grid : 9);
  // slope of log norm against radius^2 must be -1
  double mx = 0.0, my = 0.0;
  for (const auto& p : rows) {
    mx += p.t_or_radius * p.t_or_radius;
    my += std::log(p.norm);
  }
  mx /= rows.size();
  my /= rows.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : rows) {
    double x = p.t_or_radius * p.t_or_radius;
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (std::log(p.norm) - my);
  }
  double slope = sxy / sxx;
  return make_record(ctx, std::abs(slope + 1.0), 0.05);
}

CheckRecord run_theta_dual_route(const CheckContext& ctx) {
  ExactSymplecticCase c = exact_symplectic_case();
  std::vector<TestDensity> densities = {
      bump_density(Vec::Constant(1, 0.5), 1.5, 2),
      bump_density(Vec::Constant(1, -0.2), 2.0, 2),
      truncated_gaussian_density(0.3, 0.5)};
  double worst = 0.0;
  for (const TestDensity& q : densities) {
    TestDensity qt = q;
    if (!qt.fourier) {
      // tabulate the transform once; the box integral needs ~1e5 values
      const double tmin = -2.0 * 12.0 * 12.0 - 5.0, tmax = 5.0, step = 0.02;
      const int n = int((tmax - tmin) / step) + 2;
      auto table = std::make_shared<std::vector<cplx>>(n);
      for (int i = 0; i < n; ++i) {
        double t = tmin + i * step;
        int ord = 200 + int(std::abs(t) * q.radius);
        (*table)[i] = density_fourier(q, t, ord);
      }
      qt.fourier = [table, tmin, step, n](double t) {
        double s = (t - tmin) / step;
        int i = std::max(1, std::min(n - 3, int(s)));
        double u = s - i;
        // Catmull-Rom through the four surrounding nodes
        cplx p0 = (*table)[i - 1], p1 = (*table)[i], p2 = (*table)[i + 1],
             p3 = (*table)[i + 2];
        return p1 + 0.5 * u * (p2 - p0 +
               u * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
               u * (3.0 * (p1 - p2) + p3 - p0)));
      };
    }
    ThetaPairing pair = symplectic_theta_pairing(c.theta_weights, qt);
    double diff = std::abs(pair.regularized_route - pair.limit_route);
    worst = std::max(worst,
                     diff / std::max(1.0, std::abs(pair.regularized_route)));
  }
  return make_record(ctx, worst, 1e-4);
}

// cotangent chart of the torus: (theta1, xi1, theta2, xi2), V_k = d/dtheta_k
ChartedAction torus_action() {
  ChartedAction a;
  a.chart_dim = 4;
  a.lie_dim = 2;
  a.generator = [](const Vec&, int k) {
    Vec v = Vec::Zero(4);
    v(2 * k) = 1.0;
    return v;
  };
  return a;
}

// lambda = -xi dtheta on circle factor `plane`
InvariantOneForm torus_cotangent_form(int plane) {
  InvariantOneForm lam;
  lam.field.eval = [plane](const Vec& p, const Vec&) {
    GradedMatrixForm a(1, 0, 4);
    a[1u << (2 * plane)](0, 0) = -p(2 * plane + 1);
    return a;
  };
  lam.field.partial = [plane](const Vec&, const Vec&, int i) {
    GradedMatrixForm a(1, 0, 4);
    if (i == 2 * plane + 1) a[1u << (2 * plane)](0, 0) = -1.0;
    return a;
  };
  return lam;
}

CheckRecord run_one_form_sum(const CheckContext& ctx, int region) {
  ChartedAction action = torus_action();
  InvariantOneForm lam = torus_cotangent_form(0), mu = torus_cotangent_form(1);
  TestDensity q = bump_density(Vec::Zero(2), 1.2, 2);
  // the truncation tail at S is governed by the dominant moment of the
  // region, so each region is probed where its own moment is the large one
  Vec point = (region == 1) ? Vec{{0.0, 1.0, 0.0, 0.3}} : Vec{{0.0, 0.3, 0.0, 1.0}};
  double res = one_form_sum_identity_residual(action, lam, mu, q, ctx.S, point,
                                              region, 48, 48, 24);
  return make_record(ctx, res, 1e-3);
}

// ---- registry ----

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  auto add = [&](std::string name, std::string identity, std::string example,
                 std::function<CheckRecord(const CheckContext&)> fn) {
    CheckDef d;
    d.name = std::move(name);
    d.identity = std::move(identity);
    d.example = std::move(example);
    d.run = std::move(fn);
    defs.push_back(std::move(d));
  };

  add("algebra_laws",
      "graded ring laws, Koszul signs, Str cyclicity, norm submultiplicativity",
      "generic", &run_algebra_laws);
  add("curvature_exponential",
      "exp(F_t) matches the g(z) closed form entrywise", "atiyah",
      &run_curvature_exponential);
  add("decay_gaussian", "log |<Ch, Q>| is linear in |z1|^2 with slope -1",
      "atiyah", &run_decay_gaussian);
  add("decay_profile", "<Ch, Q> decays faster than radius^-6 on the last decade",
      "atiyah", &run_decay_profile);
  add("ellipticity_inequality", "h_sigma + f_lambda^2 >= |xi|^2 / 2 for |xi|^2 >= 2",
      "atiyah", &run_ellipticity_inequality);
  add("localization_circle", "D(beta_T) -> 1 off the critical set",
      "cotangent_circle", &run_localization_circle);
  add("localization_rotation", "D(beta_T) -> 1 off the critical set",
      "plane_rotation", &run_localization_rotation);
  add("moment_circle", "D lambda = d theta d xi - X xi", "cotangent_circle",
      &run_moment_circle);
  add("moment_rotation", "D lambda = 2 dx dy + X (x^2 + y^2)", "plane_rotation",
      &run_moment_rotation);
  add("multiplicativity",
      "-D(I_Phi) = Phi1 b1 c2(0) + c1(0) Phi2 b2 - dPhi1 b1 b2 - b12", "generic",
      &run_multiplicativity);
  add("one_form_sum_region1", "D(I1) = beta(lambda+mu) - beta(lambda) on U1",
      "torus", [](const CheckContext& c) { return run_one_form_sum(c, 1); });
  add("one_form_sum_region2", "D(I2) = -beta(lambda+mu) + beta(mu) on U2",
      "torus", [](const CheckContext& c) { return run_one_form_sum(c, 2); });
  add("theta_dual_route",
      "<Theta, Q> agrees between Gaussian regularization and cutoff limit",
      "exact_symplectic", &run_theta_dual_route);
  add("transgression_identity", "d/dt Ch(t) = -D(eta(t))", "generic",
      &run_transgression_identity);
  add("volterra_exponential",
      "graded exponential matches the dense-representation exponential",
      "generic", &run_volterra_exponential);
  add("volterra_norm_bound",
      "|exp(-R+S+T)| <= exp(-m(R)) exp(|S|) P_q(|T|)", "generic",
      &run_volterra_norm_bound);

  std::sort(defs.begin(), defs.end(),
            [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
  return defs;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = build_registry();
  return defs;
}

const CheckDef* find_check(const std::string& name) {
  for (const auto& d : check_registry())
    if (d.name == name) return &d;
  return nullptr;
}

Report run_selected(const RunConfig& cfg,
                    std::vector<std::pair<std::string, double>>* timings) {
  cfg.validate();
  std::vector<const CheckDef*> selected;
  if (cfg.checks.empty()) {
    for (const auto& d : check_registry())
      if (cfg.example == "all" || d.example == cfg.example) selected.push_back(&d);
    if (selected.empty())
      throw std::runtime_error("unknown example selector: " + cfg.example);
  } else {
    for (const auto& name : cfg.checks) {
      const CheckDef* d = find_check(name);
      if (!d) throw std::runtime_error("unknown check selector: " + name);
      if (cfg.example == "all" || d->example == cfg.example) selected.push_back(d);
    }
  }

  CheckContext ctx;
  ctx.T = cfg.T;
  ctx.S = cfg.S;
  ctx.grid = cfg.grid;
  ctx.tol_scale = cfg.tol_scale;
  ctx.seed = cfg.seed;

  Report rep;
  rep.config_echo = {
      {"example", cfg.example},
      {"T", format_g17(cfg.T)},
      {"S", format_g17(cfg.S)},
      {"grid", std::to_string(cfg.grid)},
      {"tol", format_g17(cfg.tol_scale)},
      {"seed", std::to_string(cfg.seed)},
  };
  for (const CheckDef* d : selected) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec = d->run(ctx);
    auto t1 = std::chrono::steady_clock::now();
    rec.name = d->name;
    rec.identity = d->identity;
    rep.records.push_back(std::move(rec));
    if (timings)
      timings->emplace_back(d->name,
                            std::chrono::duration<double>(t1 - t0).count());
  }
  return rep;
}

std::vector<DecayPoint> decay_table_oscillatory(int n_radii) {
  TestDensity q = bump_density(Vec::Zero(1), 2.0, 2);
  std::vector<double> radii = log_spaced(0.5, 14.0, n_radii);
  std::vector<DecayRow> rows = mean_decay_profile(q, radii, 0, 1.4, 96);
  std::vector<DecayPoint> out;
  for (const auto& r : rows) out.push_back({r.radius, r.norm, r.fitted});
  return out;
}

std::vector<DecayPoint> decay_table_gaussian(int n_radii) {
  TestDensity q = bump_density(Vec::Zero(1), 2.0, 2);
  std::vector<double> radii = log_spaced(0.6, 2.2, n_radii);
  std::vector<DecayRow> rows = mean_decay_profile(q, radii, 1, 0.0);
  std::vector<DecayPoint> out;
  for (const auto& r : rows) out.push_back({r.radius, r.norm, r.fitted});
  return out;
}

}  // namespace eqf
