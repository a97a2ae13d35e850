#pragma once

// Gauss-Legendre rules and an adaptive Gauss-Kronrod 7-15 integrator for
// values in any linear space providing +, scalar *, and a norm functor.

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace eqf {

struct QuadRule {
  std::vector<double> x, w;  // nodes and weights on [-1, 1]
};

// Nodes by Newton iteration on the Legendre polynomial.
inline const QuadRule& gauss_legendre(int n) {
  static std::map<int, QuadRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(r)).first->second;
}

namespace gk {
// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
}  // namespace gk

// f : double -> V.  Returns the integral over [a, b] to absolute tolerance
// abs_tol in Norm; subdivides where the embedded error estimate is large.
template <class V, class F, class Norm>
V adaptive_integrate(const F& f, double a, double b, double abs_tol,
                     const Norm& nrm, int max_depth = 28) {
  struct Impl {
    const F& f;
    const Norm& nrm;
    int max_depth;
    V run(double a, double b, double tol, int depth) const {
      const double c = 0.5 * (a + b), h = 0.5 * (b - a);
      V fc = f(c);
      V g7 = gk::wg[3] * fc;
      V k15 = gk::wgk[7] * fc;
      for (int j = 0; j < 7; ++j) {
        V lo = f(c - h * gk::xgk[j]);
        V hi = f(c + h * gk::xgk[j]);
        V s = lo + hi;
        k15 = k15 + gk::wgk[j] * s;
        if (j % 2 == 1) g7 = g7 + gk::wg[j / 2] * s;
      }
      g7 = h * g7;
      k15 = h * k15;
      double err = nrm(k15 + (-1.0) * g7);
      if (err <= tol || depth >= max_depth) return k15;
      return run(a, c, 0.5 * tol, depth + 1) + run(c, b, 0.5 * tol, depth + 1);
    }
  };
  if (a == b) return 0.0 * f(a);
  return Impl{f, nrm, max_depth}.run(a, b, abs_tol, 0);
}

inline double adaptive_integrate_scalar(const std::function<double(double)>& f,
                                        double a, double b, double abs_tol) {
  return adaptive_integrate<double>(f, a, b, abs_tol,
                                    [](double v) { return std::abs(v); });
}

}  // namespace eqf
