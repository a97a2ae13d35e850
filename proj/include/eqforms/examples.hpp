#pragma once

// Catalog of fully explicit cases: chart, action, one-form, symbol, and
// closed-form reference expressions.  The reference expressions are written
// out independently and never call the engine evaluators.

#include "eqforms/chern.hpp"
#include "eqforms/density.hpp"

namespace eqf {

struct ExampleCase {
  std::string name;
  ChartedAction action;
  SuperconnectionSpec spec;
  std::vector<Vec> sample_points;
  std::vector<Vec> sample_lie;
  std::vector<double> sample_t;

  // D(lambda)(X) closed form
  std::function<ExteriorElement(const Vec& point, const Vec& x)> oracle_d_lambda;
  // e^{F_t(X)} closed form for the lambda-free curvature (atiyah only)
  std::function<GradedMatrixForm(double t, const Vec& x, const Vec& point)>
      oracle_exp_curvature;
  // transgression closed form (full spec including lambda)
  std::function<ExteriorElement(double t, const Vec& x, const Vec& point)>
      oracle_transgression;
  // boundary-value coefficient of beta: the one-form factor multiplying
  // <1/(X +- i0), Q>, plus the sign (+1 or -1) of the i0 prescription
  std::function<ExteriorElement(const Vec& point)> oracle_beta_coefficient;
  std::function<int(const Vec& point)> oracle_beta_sign;
};

ExampleCase plane_rotation_case();
ExampleCase cotangent_circle_case();
ExampleCase atiyah_case();

// g(z) = (e^z - 1)/z with the removable singularity, and its derivative.
cplx atiyah_g(cplx z);
cplx atiyah_g_prime(cplx z);

// transversal-ellipticity margin h_sigma + |f_lambda|^2 - |xi|^2 / 2
double atiyah_inequality_margin(const Vec& point);

// Exact symplectic case on R^2: rotation action, omega = (x dy - y dx)/2,
// Phi = |p|^2 / 2.
struct ExactSymplecticCase {
  ChartedAction action;
  InvariantOneForm omega;                // the primitive one-form
  std::function<Vec(const Vec&)> phi;    // moment map, with f_omega = -Phi
  InvariantOneForm kirwan;               // lambda_k from Phi and the metric
  std::vector<double> theta_weights;     // weights of the linear action on V = C
};
ExactSymplecticCase exact_symplectic_case();

// Scalar exponential of an exterior element (finite series off the scalar
// part); used by the closed-form references.
ExteriorElement exp_scalar_form(const ExteriorElement& w);

struct DecayRow {
  double radius;
  double norm;
  bool fitted;
};

// Norms of the paired Chern form of the atiyah case at t = 1 along a ray:
// axis == 0: z2-axis (z1 = 0), oscillatory decay, fitted window;
// axis == 1: the constant-phase direction z1 = z2 = r, Gaussian factor.
std::vector<DecayRow> mean_decay_profile(const TestDensity& q,
                                         const std::vector<double>& radii, int axis,
                                         double min_radius_fitted = 0.0,
                                         int x_order = 64);

}  // namespace eqf
