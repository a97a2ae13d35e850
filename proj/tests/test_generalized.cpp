#include "doctest.h"
#include "eqforms/examples.hpp"
#include "eqforms/pairing.hpp"
#include "eqforms/theta.hpp"

using namespace eqf;

TEST_CASE("pair_density against an analytic transform") {
  TestDensity q = truncated_gaussian_density(0.3, 0.5);
  for (double a : {0.0, 1.7, -4.2, 12.0}) {
    cplx got = pair_density_scalar(
        [a](const Vec& x) { return std::exp(cplx(0.0, -a * x(0))); }, q);
    cplx want = q.fourier(a);
    CHECK(std::abs(got - want) <= 1e-9);
  }
}

TEST_CASE("density seminorm and normalization") {
  TestDensity q = bump_density(Vec::Zero(1), 1.5, 2);
  cplx mass = pair_density_scalar([](const Vec&) { return cplx(1.0); }, q);
  CHECK(std::abs(mass - 1.0) <= 1e-9);
  CHECK(q.seminorm(0) > 0.0);
  CHECK(q.seminorm(1) >= q.seminorm(0));
}

TEST_CASE("boundary values 1/(X -+ i0)") {
  std::vector<TestDensity> densities = {truncated_gaussian_density(0.3, 0.5),
                                        bump_density(Vec::Constant(1, 0.2), 1.3, 2)};
  for (const TestDensity& q : densities) {
    for (int sign : {+1, -1}) {
      BoundaryValue bv = boundary_value_pairing(q, sign);
      CHECK(std::abs(bv.pv_route - bv.fourier_route) <= 1e-6);
      // imaginary part is -+ pi Q(0) plus the PV (real for real densities)
      CHECK(std::imag(bv.pv_route) ==
            doctest::Approx(-sign * M_PI * q.at1(0.0)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(boundary_value_pairing(q, 2), std::invalid_argument);
  }
}

TEST_CASE("localization guard near the critical set") {
  ExampleCase c = plane_rotation_case();
  TestDensity q = bump_density(Vec::Zero(1), 1.0, 2);
  CHECK_THROWS_AS(
      localization_residual(c.action, *c.spec.one_form, q, 5.0, Vec{{1e-8, 0.0}}),
      std::domain_error);
}

TEST_CASE("localization residual decreases with T") {
  ExampleCase c = plane_rotation_case();
  TestDensity q = bump_density(Vec::Zero(1), 1.5, 2);
  Vec p{{1.3, 0.6}};
  double r1 = localization_residual(c.action, *c.spec.one_form, q, 5.0, p, 48);
  double r2 = localization_residual(c.action, *c.spec.one_form, q, 10.0, p, 48);
  CHECK(r2 < r1);
  CHECK(r2 < 0.05);
}

TEST_CASE("pair_family_with_density matches the paired closed form") {
  // plane rotation: beta_T paired = int -lambda (e^{iTXr^2}-1)/(Xr^2) Q(X) dX
  ExampleCase c = plane_rotation_case();
  const SuperconnectionSpec spec = c.spec;
  TestDensity q = bump_density(Vec::Zero(1), 1.2, 2);
  Vec p{{1.1, -0.4}};
  const double tmax = 6.0;
  PairedValue got = pair_family_with_density(
      [&spec](double t, const Vec& x) {
        return transgression_form(spec, t, x, Vec{{1.1, -0.4}});
      },
      q, tmax);
  double r2 = p.squaredNorm();
  cplx factor = pair_density_scalar(
      [&](const Vec& x) {
        double a = x(0) * r2;
        return -(std::exp(cplx(0.0, tmax * a)) - 1.0) / a;
      },
      q);
  ExteriorElement want = factor * c.spec.one_form->form(p);
  CHECK((got.value - want).norm() <= 1e-7);
}

TEST_CASE("theta guards") {
  TestDensity q = truncated_gaussian_density(0.0, 0.5);
  CHECK_THROWS_AS(symplectic_theta_pairing({}, q), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_theta_pairing({1.0, -0.5}, q), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_theta_pairing({0.0}, q), std::invalid_argument);
}

TEST_CASE("theta homogeneity is exact") {
  std::vector<double> w = {1.0, 0.7};
  Vec v{{0.3, -1.1, 0.8, 0.2}};
  for (double t : {2.0, 17.5, 160.0})
    CHECK(theta_homogeneity_residual(w, t, v) <= 1e-12 * t);
}

TEST_CASE("theta dual routes against the radial closed form") {
  // weight-1 action on C: <Theta, Q> = i pi int_0^inf \hat Q(-s) ds
  TestDensity q = truncated_gaussian_density(0.3, 0.5);
  ThetaPairing pair = symplectic_theta_pairing({1.0}, q);
  cplx want = cplx(0.0, M_PI) * adaptive_integrate<cplx>(
                                    [&](double s) { return q.fourier(-s); }, 0.0,
                                    40.0, 1e-12, [](cplx z) { return std::abs(z); });
  CHECK(std::abs(pair.regularized_route - want) <= 2e-4 * std::abs(want));
  CHECK(std::abs(pair.limit_route - want) <= 2e-4 * std::abs(want));
  CHECK(std::abs(pair.regularized_route - pair.limit_route) <=
        1e-4 * std::abs(want));
}

TEST_CASE("one form sum region validation") {
  ChartedAction action;
  action.chart_dim = 2;
  action.lie_dim = 2;
  action.generator = [](const Vec&, int k) {
    Vec v = Vec::Zero(2);
    v(k) = 1.0;
    return v;
  };
  InvariantOneForm lam;
  lam.field.eval = [](const Vec&, const Vec&) { return GradedMatrixForm(1, 0, 2); };
  TestDensity q = bump_density(Vec::Zero(2), 1.0, 2);
  CHECK_THROWS_AS(one_form_sum_identity_residual(action, lam, lam, q, 1.0,
                                                 Vec{{0.0, 0.0}}, 3),
                  std::invalid_argument);
}
