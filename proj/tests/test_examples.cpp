#include <random>

#include "doctest.h"
#include "eqforms/examples.hpp"
#include "eqforms/pairing.hpp"
#include "eqforms/theta.hpp"

using namespace eqf;

TEST_CASE("g(z) series and derivative consistency") {
  for (cplx z : {cplx(0.3, 1.2), cplx(-2.0, 0.1)}) {
    cplx g = atiyah_g(z);
    CHECK(std::abs(g * z + 1.0 - std::exp(z)) <= 1e-12);
    cplx h(1e-6, 0.0);
    cplx fd = (atiyah_g(z + h) - atiyah_g(z - h)) / (2.0 * h);
    CHECK(std::abs(atiyah_g_prime(z) - fd) <= 1e-7);
  }
  // series branch: g(0) = 1, g'(0) = 1/2, g'(z) = 1/2 + z/3 + O(z^2)
  CHECK(std::abs(atiyah_g(cplx(1e-8, 0.0)) - 1.0) <= 1e-7);
  CHECK(std::abs(atiyah_g_prime(cplx(1e-8, 0.0)) - 0.5) <= 1e-7);
}

TEST_CASE("exp_scalar_form against the super exponential") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> d;
  for (int it = 0; it < 20; ++it) {
    ExteriorElement w(3);
    for (unsigned m = 0; m < w.size(); ++m) w[m] = cplx(d(rng), d(rng));
    GradedMatrixForm a = GradedMatrixForm::from_scalar_form(1, 0, w);
    GradedMatrixForm e = super_exponential(a);
    ExteriorElement got = exp_scalar_form(w);
    for (unsigned m = 0; m < w.size(); ++m)
      CHECK(std::abs(got[m] - e[m](0, 0)) <= 1e-10 * (1.0 + std::abs(got[m])));
  }
}

TEST_CASE("catalog sample grids are usable") {
  for (const ExampleCase& c :
       {plane_rotation_case(), cotangent_circle_case(), atiyah_case()}) {
    CAPTURE(c.name);
    CHECK(!c.sample_points.empty());
    CHECK(!c.sample_lie.empty());
    CHECK(!c.sample_t.empty());
    for (const Vec& p : c.sample_points) CHECK(int(p.size()) == c.action.chart_dim);
    CHECK(c.oracle_d_lambda);
  }
}

TEST_CASE("beta boundary-value coefficients of the rank-1 cases") {
  // paired beta at T -> inf equals the closed one-form coefficient times
  // <1/(X -+ i0), Q>; checked through the truncated integral at large T
  TestDensity q = truncated_gaussian_density(0.2, 0.4);
  for (const ExampleCase& c : {plane_rotation_case(), cotangent_circle_case()}) {
    CAPTURE(c.name);
    Vec p = (c.name == "plane_rotation") ? Vec{{1.0, 0.0}} : Vec{{0.0, 1.0}};
    const SuperconnectionSpec spec = c.spec;
    const double tmax = 150.0;
    PairedValue got = pair_family_with_density(
        [&spec, p](double t, const Vec& x) {
          return transgression_form(spec, t, x, p);
        },
        q, tmax, 64, 1e-9);
    int sign = c.oracle_beta_sign(p);
    BoundaryValue bv = boundary_value_pairing(q, sign);
    ExteriorElement want = bv.pv_route * c.oracle_beta_coefficient(p);
    CHECK((got.value - want).norm() <= 1e-3 * (1.0 + want.norm()));
  }
}

TEST_CASE("transversal ellipticity margin") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int violations = 0;
  for (int it = 0; it < 1000; ++it) {
    Vec p(4);
    for (int i = 0; i < 4; ++i) p(i) = u(rng);
    double n = p.norm();
    if (n < 1e-9) continue;
    p *= (std::sqrt(2.0) + 3.0 * std::abs(u(rng))) / n;  // |xi|^2 >= 2
    if (atiyah_inequality_margin(p) < 0.0) ++violations;
  }
  CHECK(violations == 0);
  // inside the ball the bound may fail; the margin is not identically signed
  CHECK(atiyah_inequality_margin(Vec{{0.1, 0.0, 0.0, 0.1}}) < 0.0);
}

TEST_CASE("exact symplectic data") {
  ExactSymplecticCase c = exact_symplectic_case();
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int it = 0; it < 100; ++it) {
    Vec p{{u(rng), u(rng)}};
    double f = moment_of_one_form(c.omega, c.action, p)(0);
    CHECK(f == doctest::Approx(-c.phi(p)(0)).epsilon(1e-12));
  }
  CHECK(c.theta_weights == std::vector<double>{1.0});
}

TEST_CASE("gaussian decay axis is exact") {
  TestDensity q = bump_density(Vec::Zero(1), 2.0, 2);
  std::vector<DecayRow> rows = mean_decay_profile(q, {0.7, 1.1, 1.6}, 1);
  // norm(r) = norm(0) e^{-r^2}: check pairwise log ratios
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double got = std::log(rows[i].norm / rows[0].norm);
    double want = -(rows[i].radius * rows[i].radius - rows[0].radius * rows[0].radius);
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("oscillatory decay profile decays superpolynomially") {
  TestDensity q = bump_density(Vec::Zero(1), 2.0, 2);
  std::vector<DecayRow> rows = mean_decay_profile(q, {2.0, 4.0, 8.0, 12.0}, 0, 0.0, 96);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].norm < rows[i - 1].norm);
  // between r = 4 and r = 12 the norm must drop faster than r^-6
  double slope = std::log(rows[3].norm / rows[1].norm) / std::log(12.0 / 4.0);
  CHECK(slope < -6.0);
}
