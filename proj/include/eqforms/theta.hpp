#pragma once

// The generalized form Theta of a linear U(1) action on V = C^m with
// positive weights, paired with a test density Q on the Lie algebra:
//
//   <Theta, Q> = i^m  int_V  \hat Q(-Phi(v)) dv,   Phi(v) = sum_j w_j |v_j|^2
//
// computed two independent ways: Gaussian regularization with an epsilon
// schedule and Richardson extrapolation, and the large-T limit of the
// compactly supported oscillatory integral int_V chi(v) (iT)^m
// \hat Q(-T Phi(v)) dv coming from e^{iT D omega}.

#include "eqforms/pairing.hpp"

namespace eqf {

struct ThetaPairing {
  cplx regularized_route;
  cplx limit_route;
};

inline void check_theta_weights(const std::vector<double>& w) {
  if (w.empty()) throw std::invalid_argument("theta: no weights");
  for (double x : w)
    if (x <= 0.0)
      throw std::invalid_argument("theta: moment map not proper (need all weights > 0)");
}

inline double theta_phi(const std::vector<double>& w, const Vec& v) {
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j)
    s += w[j] * (v(2 * j) * v(2 * j) + v(2 * j + 1) * v(2 * j + 1));
  return s;
}

// int over R^{2m} of g(v) by a tensor Gauss rule on [-L, L]^{2m}
inline cplx theta_box_integral(const std::function<cplx(const Vec&)>& g, int m2,
                               double box, int order) {
  const QuadRule& gr = gauss_legendre(order);
  const int n = int(gr.x.size());
  std::vector<int> idx(m2, 0);
  cplx acc = 0.0;
  while (true) {
    Vec v(m2);
    double w = 1.0;
    for (int d = 0; d < m2; ++d) {
      v(d) = box * gr.x[idx[d]];
      w *= box * gr.w[idx[d]];
    }
    acc += w * g(v);
    int d = 0;
    while (d < m2 && ++idx[d] == n) idx[d++] = 0;
    if (d == m2) break;
  }
  return acc;
}

inline ThetaPairing symplectic_theta_pairing(const std::vector<double>& weights,
                                             const TestDensity& q, int order = 160,
                                             double box = 12.0,
                                             const std::vector<double>& t_schedule = {
                                                 20.0, 40.0, 80.0}) {
  check_theta_weights(weights);
  if (q.dim != 1) throw std::invalid_argument("theta: need a 1-dimensional density");
  const int m = int(weights.size());
  cplx im_pow = std::pow(cplx(0.0, 1.0), m);

  auto qhat = [&](double t) { return density_fourier(q, t); };

  // route 1: Gaussian regularization, Richardson in epsilon
  auto reg_value = [&](double eps) {
    auto g = [&](const Vec& v) {
      return qhat(-theta_phi(weights, v)) * std::exp(-eps * v.squaredNorm());
    };
    return im_pow * theta_box_integral(g, 2 * m, box, order);
  };
  cplx i1 = reg_value(1e-2), i2 = reg_value(5e-3), i3 = reg_value(2.5e-3);
  cplx r1 = 2.0 * i2 - i1, r2 = 2.0 * i3 - i2;
  ThetaPairing out;
  out.regularized_route = 2.0 * r2 - r1;

  // route 2: compact cutoff chi(v) on the r0/r1 plateau and growing T, with
  // J(T) = (iT)^m int chi(v) \hat Q(-T Phi(v)) dv written in the exactly
  // rescaled variable u = sqrt(T) v (homogeneity checked separately)
  const double r0 = 2.0, r1c = 4.0;
  cplx last = 0.0;
  for (double t : t_schedule) {
    double rt = std::sqrt(t);
    auto g = [&](const Vec& u) {
      double chi = plateau_cutoff(u.norm() / rt, r0, r1c);
      if (chi == 0.0) return cplx(0.0);
      return chi * qhat(-theta_phi(weights, u));
    };
    last = im_pow * theta_box_integral(g, 2 * m, box, order);
  }
  out.limit_route = last;
  return out;
}

// Homogeneity of the symplectic data used in the limit route: Phi(sqrt(T) v)
// equals T Phi(v) exactly.
inline double theta_homogeneity_residual(const std::vector<double>& weights, double t,
                                         const Vec& v) {
  Vec vs = std::sqrt(t) * v;
  return std::abs(theta_phi(weights, vs) - t * theta_phi(weights, v));
}

}  // namespace eqf
