#pragma once

// Relative representatives (alpha, beta_T), the partition product, and the
// compact-support representative  p^chi(alpha, beta) = chi alpha + dchi ^ beta.

#include "eqforms/chern.hpp"

namespace eqf {

// rho(s) = exp(-1/s) for s > 0, else 0
inline double bump_rho(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

// Smooth invariant partition subordinate to (U1, U2) from distance-like
// functions d1, d2 to the complements:  Phi1 = rho(d1) / (rho(d1) + rho(d2)).
struct PartitionPair {
  std::function<double(const Vec&)> d1, d2;

  double phi1(const Vec& p) const {
    double r1 = bump_rho(d1(p)), r2 = bump_rho(d2(p));
    double s = r1 + r2;
    if (s == 0.0)
      throw std::domain_error("PartitionPair: point outside U1 and U2");
    return r1 / s;
  }
  double phi2(const Vec& p) const { return 1.0 - phi1(p); }
};

// Exterior derivative of a scalar function as a degree-1 element, central
// differences with one Richardson level.
inline ExteriorElement d_scalar(const std::function<double(const Vec&)>& f,
                                const Vec& point, int n_generators) {
  ExteriorElement out(n_generators);
  const double h = fd_step(point);
  for (int i = 0; i < n_generators; ++i) {
    auto central = [&](double hh) {
      Vec pp = point, pm = point;
      pp(i) += hh;
      pm(i) -= hh;
      return (f(pp) - f(pm)) / (2.0 * hh);
    };
    out[1u << i] = (4.0 * central(0.5 * h) - central(h)) / 3.0;
  }
  return out;
}

// A relative representative: closed alpha on the chart, beta_T off the
// support set, evaluated pointwise at fixed (X, T).
struct RelativeRep {
  // alpha(point, X)
  std::function<ExteriorElement(const Vec&, const Vec&)> alpha;
  // beta_T(point, X)
  std::function<ExteriorElement(const Vec&, const Vec&)> beta;
  int parity = 1;  // +1 even alpha (the Chern case), -1 odd
};

// beta component of the partition product a1 <>_Phi a2:
//   Phi1 b1 ^ a2 + (-1)^{|a1|} a1 ^ Phi2 b2 - (-1)^{|a1|} dPhi1 ^ b1 ^ b2
inline RelativeRep relative_product(const RelativeRep& a1, const RelativeRep& a2,
                                    const PartitionPair& phi) {
  RelativeRep out;
  out.parity = a1.parity * a2.parity;
  out.alpha = [a1, a2](const Vec& p, const Vec& x) {
    return wedge(a1.alpha(p, x), a2.alpha(p, x));
  };
  double s = (a1.parity == -1) ? -1.0 : 1.0;
  out.beta = [a1, a2, phi, s](const Vec& p, const Vec& x) {
    auto f1 = [&phi](const Vec& q) { return phi.phi1(q); };
    ExteriorElement b1 = a1.beta(p, x), b2 = a2.beta(p, x);
    ExteriorElement term = phi.phi1(p) * wedge(b1, a2.alpha(p, x));
    term += s * phi.phi2(p) * wedge(a1.alpha(p, x), b2);
    term -= s * wedge(d_scalar(f1, p, b1.generators()), wedge(b1, b2));
    return term;
  };
  return out;
}

// p^chi(alpha, beta) = chi alpha + dchi ^ beta
inline ExteriorElement compact_support_rep(const RelativeRep& a,
                                           const std::function<double(const Vec&)>& chi,
                                           const Vec& point, const Vec& x) {
  ExteriorElement al = a.alpha(point, x);
  ExteriorElement be = a.beta(point, x);
  return chi(point) * al + wedge(d_scalar(chi, point, al.generators()), be);
}

// Retarded pieces: Ch at t = t_start and the transgression integral from
// t_start to T.
struct RetardedRep {
  ExteriorElement chern_start;  // Ch(spec, t_start)
  ExteriorElement beta_tail;    // integral of eta over [t_start, T]
};

inline RetardedRep retarded_rep(const SuperconnectionSpec& spec, double t_start,
                                double tmax, const Vec& x, const Vec& point,
                                double abs_tol = 1e-10) {
  if (t_start < 0.0 || tmax < t_start)
    throw std::invalid_argument("retarded_rep: need 0 <= t_start <= T");
  RetardedRep out;
  out.chern_start = chern_form(spec, t_start, x, point);
  auto f = [&](double t) { return transgression_form(spec, t, x, point); };
  auto nrm = [](const ExteriorElement& e) { return e.norm(); };
  out.beta_tail =
      adaptive_integrate<ExteriorElement>(f, t_start, tmax, abs_tol, nrm);
  return out;
}

}  // namespace eqf
