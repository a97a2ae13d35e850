#pragma once

// Smooth compactly supported test densities Q(X)dX on the Lie algebra,
// with numeric seminorms and (optionally) an analytic Fourier transform.

#include "eqforms/equivariant.hpp"
#include "eqforms/quadrature.hpp"

namespace eqf {

// 1 on [0, r0], 0 beyond r1, smooth monotone between.
inline double plateau_cutoff(double r, double r0, double r1) {
  auto rho = [](double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; };
  double a = rho(r1 - r), b = rho(r - r0);
  if (a + b == 0.0) return r <= r0 ? 1.0 : 0.0;
  return a / (a + b);
}

struct TestDensity {
  int dim = 1;
  Vec center;
  double radius = 1.0;
  std::function<double(const Vec&)> eval;
  // optional analytic \hat Q(t) = int Q(X) e^{-itX} dX, dim == 1 only
  std::function<cplx(double)> fourier;

  double operator()(const Vec& x) const { return eval(x); }
  double at1(double x) const { return eval(Vec::Constant(1, x)); }

  // Numeric sup of |d^a Q| summed over axis multi-indices |a| <= r, on a
  // sample grid over the support box.
  double seminorm(int r, int grid_per_dim = 41) const;
};

namespace detail {
inline double fd_partial(const std::function<double(const Vec&)>& f, Vec x,
                         const std::vector<int>& dirs, std::size_t k, double h) {
  if (k == dirs.size()) return f(x);
  Vec xp = x, xm = x;
  xp(dirs[k]) += h;
  xm(dirs[k]) -= h;
  return (fd_partial(f, xp, dirs, k + 1, h) - fd_partial(f, xm, dirs, k + 1, h)) /
         (2.0 * h);
}
}  // namespace detail

inline double TestDensity::seminorm(int r, int grid_per_dim) const {
  const double h = 1e-3 * radius;
  double best = 0.0;
  std::vector<int> idx(dim, 0);
  while (true) {
    Vec x = center;
    for (int d = 0; d < dim; ++d)
      x(d) += radius * (2.0 * idx[d] / (grid_per_dim - 1.0) - 1.0);
    double s = 0.0;
    std::vector<std::vector<int>> stack = {{}};
    for (int ord = 0; ord <= r; ++ord) {
      std::vector<std::vector<int>> next;
      for (const auto& dirs : stack) {
        s += std::abs(detail::fd_partial(eval, x, dirs, 0, h));
        for (int d = dirs.empty() ? 0 : dirs.back(); d < dim; ++d) {
          auto e = dirs;
          e.push_back(d);
          next.push_back(e);
        }
      }
      stack = std::move(next);
    }
    best = std::max(best, s);
    int d = 0;
    while (d < dim && ++idx[d] == grid_per_dim) idx[d++] = 0;
    if (d == dim) break;
  }
  return best;
}

// Normalized bump exp(-1/(1-u^2)^k), u = |X - c| / rho; higher k flattens
// the edge and speeds up Fourier decay.
inline TestDensity bump_density(Vec center, double radius, int flatness = 2) {
  TestDensity q;
  q.dim = int(center.size());
  q.center = center;
  q.radius = radius;
  auto raw = [center, radius, flatness](const Vec& x) {
    double u2 = (x - center).squaredNorm() / (radius * radius);
    if (u2 >= 1.0) return 0.0;
    return std::exp(-1.0 / std::pow(1.0 - u2, flatness));
  };
  // normalize to unit mass with a tensor Gauss rule
  const QuadRule& g = gauss_legendre(120);
  double mass = 0.0;
  std::vector<int> idx(q.dim, 0);
  const int n = int(g.x.size());
  while (true) {
    Vec x = center;
    double w = 1.0;
    for (int d = 0; d < q.dim; ++d) {
      x(d) += radius * g.x[idx[d]];
      w *= radius * g.w[idx[d]];
    }
    mass += w * raw(x);
    int d = 0;
    while (d < q.dim && ++idx[d] == n) idx[d++] = 0;
    if (d == q.dim) break;
  }
  q.eval = [raw, mass](const Vec& x) { return raw(x) / mass; };
  return q;
}

// Gaussian of width s centered at c, cut off smoothly between 6s and 9s;
// the analytic Fourier transform ignores the cutoff (relative error ~ 2e-9,
// the Gaussian mass beyond 6s).
inline TestDensity truncated_gaussian_density(double c, double s) {
  TestDensity q;
  q.dim = 1;
  q.center = Vec::Constant(1, c);
  q.radius = 9.0 * s;
  const double norm = 1.0 / (s * std::sqrt(2.0 * M_PI));
  q.eval = [c, s, norm](const Vec& x) {
    double u = (x(0) - c) / s;
    return norm * std::exp(-0.5 * u * u) * plateau_cutoff(std::abs(u), 6.0, 9.0);
  };
  q.fourier = [c, s](double t) {
    return std::exp(cplx(-0.5 * s * s * t * t, -t * c));
  };
  return q;
}

}  // namespace eqf
