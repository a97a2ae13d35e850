#pragma once

// Exponential of a graded matrix form by the Volterra series.  The
// positive-degree part is nilpotent, so the series terminates after at
// most n_generators insertions:
//
//   e^{M+w} = e^M + sum_k  int_{simplex_k} e^{s1 M} w e^{s2 M} w ... e^{s_{k+1} M}
//
// Each simplex integral is evaluated exactly.  In the generic case M is
// diagonalized and the integral over an eigenvalue path equals a divided
// difference of exp, computed stably as the corner entry of the exponential
// of a small bidiagonal matrix.  When the eigenbasis is ill-conditioned the
// same integral is taken from the top-right block of the exponential of a
// block-bidiagonal matrix; both routes are exact.

#include <algorithm>
#include <functional>
#include <map>
#include <unsupported/Eigen/MatrixFunctions>

#include "eqforms/graded_matrix.hpp"

namespace eqf {

// Divided difference exp[x_0,...,x_k] via the bidiagonal-exponential identity.
inline cplx exp_divided_difference(const std::vector<cplx>& x) {
  const int k = int(x.size()) - 1;
  if (k == 0) return std::exp(x[0]);
  Matc z = Matc::Zero(k + 1, k + 1);
  for (int i = 0; i <= k; ++i) z(i, i) = x[i];
  for (int i = 0; i < k; ++i) z(i, i + 1) = 1.0;
  Matc e = z.exp();
  return e(0, k);
}

namespace detail {

struct DDCache {
  const Eigen::VectorXcd& d;
  std::map<std::vector<int>, cplx> memo;
  cplx get(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    auto it = memo.find(idx);
    if (it != memo.end()) return it->second;
    std::vector<cplx> x(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) x[i] = d(idx[i]);
    cplx v = exp_divided_difference(x);
    memo.emplace(std::move(idx), v);
    return v;
  }
};

// Path sum for one ordered sequence of insertions, in the eigenbasis of M.
inline void path_sum(const std::vector<const Matc*>& w, int level,
                     const std::vector<int>& prefix, cplx weight,
                     DDCache& dd, Matc& out) {
  const int n = int(out.rows());
  if (level == int(w.size())) {
    out(prefix.front(), prefix.back()) += weight * dd.get(prefix);
    return;
  }
  const Matc& wl = *w[level];
  std::vector<int> next = prefix;
  next.push_back(0);
  for (int j = 0; j < n; ++j) {
    cplx e = wl(prefix.back(), j);
    if (e == cplx(0.0)) continue;
    next.back() = j;
    path_sum(w, level + 1, next, weight * e, dd, out);
  }
}

// Simplex integral via the block-bidiagonal exponential (basis-free).
inline Matc simplex_block(const Matc& m, const std::vector<const Matc*>& w) {
  const int n = int(m.rows());
  const int k = int(w.size());
  Matc b = Matc::Zero(n * (k + 1), n * (k + 1));
  for (int i = 0; i <= k; ++i) b.block(n * i, n * i, n, n) = m;
  for (int i = 0; i < k; ++i) b.block(n * i, n * (i + 1), n, n) = *w[i];
  Matc e = b.exp();
  return e.block(0, n * k, n, n);
}

}  // namespace detail

inline GradedMatrixForm super_exponential(const GradedMatrixForm& a) {
  const int n = a.dim();
  const Matc& m0 = a[0];

  std::vector<unsigned> nz;
  for (unsigned m = 1; m < a.monomials(); ++m)
    if (!a[m].isZero(0.0)) nz.push_back(m);

  GradedMatrixForm out(a.dim_plus(), a.dim_minus(), a.generators());

  bool use_eigen = true;
  Eigen::ComplexEigenSolver<Matc> es;
  Matc v, vinv;
  if (n == 1) {
    v = vinv = Matc::Identity(1, 1);
    es.compute(m0, false);
  } else {
    es.compute(m0, true);
    if (es.info() != Eigen::Success) {
      use_eigen = false;
    } else {
      v = es.eigenvectors();
      Eigen::JacobiSVD<Matc> svd(v);
      double smin = svd.singularValues()(n - 1);
      double smax = svd.singularValues()(0);
      if (!(smin > 0.0) || smax / smin > 1e8) use_eigen = false;
      else vinv = v.inverse();
    }
  }

  if (use_eigen) {
    Eigen::VectorXcd d = (n == 1) ? Eigen::VectorXcd::Constant(1, m0(0, 0))
                                  : es.eigenvalues();
    detail::DDCache dd{d, {}};
    std::vector<Matc> wt(a.monomials());
    for (unsigned m : nz) wt[m] = vinv * a[m] * v;

    Matc deg0 = Matc::Zero(n, n);
    for (int i = 0; i < n; ++i) deg0(i, i) = std::exp(d(i));
    std::vector<Matc> acc(a.monomials(), Matc::Zero(n, n));
    acc[0] = deg0;

    // DFS over ordered sequences of pairwise-disjoint insertion monomials.
    std::vector<const Matc*> seq;
    std::vector<int> prefix;
    std::function<void(unsigned, double)> rec = [&](unsigned used, double sign) {
      for (unsigned m : nz) {
        if (m & used) continue;
        double s2 = sign * koszul_sign(used, m);
        seq.push_back(&wt[m]);
        Matc term = Matc::Zero(n, n);
        for (int i0 = 0; i0 < n; ++i0) {
          prefix.assign(1, i0);
          detail::path_sum(seq, 0, prefix, cplx(1.0), dd, term);
        }
        acc[used | m] += s2 * term;
        rec(used | m, s2);
        seq.pop_back();
      }
    };
    rec(0u, 1.0);

    for (unsigned m = 0; m < a.monomials(); ++m)
      if (!acc[m].isZero(0.0)) out[m] = v * acc[m] * vinv;
    return out;
  }

  // degenerate eigenbasis: block-bidiagonal route
  out[0] = m0.exp();
  std::vector<const Matc*> seq;
  std::function<void(unsigned, double)> rec = [&](unsigned used, double sign) {
    for (unsigned m : nz) {
      if (m & used) continue;
      double s2 = sign * koszul_sign(used, m);
      seq.push_back(&a[m]);
      out[used | m] += s2 * detail::simplex_block(m0, seq);
      rec(used | m, s2);
      seq.pop_back();
    }
  };
  rec(0u, 1.0);
  return out;
}

// Truncated exponential sum_{k<=q} t^k / k!
inline double truncated_exp(double t, int q) {
  double s = 1.0, term = 1.0;
  for (int k = 1; k <= q; ++k) {
    term *= t / k;
    s += term;
  }
  return s;
}

// Norm bound for e^{-R+S+T} with R Hermitian, S commuting with R, T of
// positive exterior degree on q generators:
//   |e^{-R+S+T}|  <=  e^{-min_eig(R)} * e^{|S|} * truncated_exp(|T|, q)
inline double volterra_norm_bound(const Matc& r, const Matc& s, const GradedMatrixForm& t) {
  Eigen::SelfAdjointEigenSolver<Matc> es(r);
  double m = es.eigenvalues()(0);
  Eigen::JacobiSVD<Matc> svd(s);
  double ns = s.isZero(0.0) ? 0.0 : svd.singularValues()(0);
  return std::exp(-m) * std::exp(ns) * truncated_exp(graded_norm(t), t.generators());
}

}  // namespace eqf
