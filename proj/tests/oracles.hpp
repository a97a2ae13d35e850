#pragma once

// Reference implementations used only by the tests.  Each one takes a route
// through the mathematics that is independent of the engine code paths:
// wedge products by explicit permutation sorting, the graded exponential by
// exponentiating the left-multiplication operator on the full algebra.

#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "eqforms/graded_matrix.hpp"

namespace oracle {

using eqf::cplx;
using eqf::ExteriorElement;
using eqf::GradedMatrixForm;
using eqf::Matc;

// Sign of sorting the concatenation of two ascending index lists, by
// explicit bubble sort; zero if a generator repeats.
inline int permutation_sign(unsigned ma, unsigned mb) {
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

inline ExteriorElement wedge_bruteforce(const ExteriorElement& a,
                                        const ExteriorElement& b) {
  ExteriorElement out(a.generators());
  for (unsigned ma = 0; ma < a.size(); ++ma)
    for (unsigned mb = 0; mb < b.size(); ++mb) {
      int s = permutation_sign(ma, mb);
      if (s) out[ma | mb] += double(s) * a[ma] * b[mb];
    }
  return out;
}

inline GradedMatrixForm wedge_bruteforce(const GradedMatrixForm& a,
                                         const GradedMatrixForm& b) {
  GradedMatrixForm out(a.dim_plus(), a.dim_minus(), a.generators());
  for (unsigned ma = 0; ma < a.monomials(); ++ma)
    for (unsigned mb = 0; mb < b.monomials(); ++mb) {
      int s = permutation_sign(ma, mb);
      if (s) out[ma | mb] += double(s) * (a[ma] * b[mb]);
    }
  return out;
}

// The left-multiplication operator of a on the module Lambda (x) C^n,
// basis e_mask (x) v_i ordered mask-major.
inline Matc left_multiplication(const GradedMatrixForm& a) {
  const int n = a.dim();
  const unsigned mm = unsigned(a.monomials());
  Matc l = Matc::Zero(mm * n, mm * n);
  for (unsigned ma = 0; ma < mm; ++ma)
    for (unsigned mb = 0; mb < mm; ++mb) {
      int s = permutation_sign(ma, mb);
      if (!s) continue;
      l.block((ma | mb) * n, mb * n, n, n) += double(s) * a[ma];
    }
  return l;
}

// exp(a) through exp of the left-multiplication operator applied to 1.
inline GradedMatrixForm exp_dense_rep(const GradedMatrixForm& a) {
  const int n = a.dim();
  Matc e = left_multiplication(a).exp();
  GradedMatrixForm out(a.dim_plus(), a.dim_minus(), a.generators());
  for (unsigned m = 0; m < a.monomials(); ++m)
    out[m] = e.block(m * n, 0, n, n);
  return out;
}

inline double rel_error(const GradedMatrixForm& got, const GradedMatrixForm& want) {
  double num = 0.0, den = 0.0;
  for (unsigned m = 0; m < got.monomials(); ++m) {
    num += (got[m] - want[m]).norm();
    den += want[m].norm();
  }
  return num / std::max(den, 1e-300);
}

// Random helpers

inline ExteriorElement random_exterior(std::mt19937_64& rng, int gens) {
  std::normal_distribution<double> d;
  ExteriorElement e(gens);
  for (unsigned m = 0; m < e.size(); ++m) e[m] = cplx(d(rng), d(rng));
  return e;
}

inline Matc random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> d;
  Matc m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(d(rng), d(rng));
  return m;
}

inline GradedMatrixForm random_graded(std::mt19937_64& rng, int p, int q, int gens) {
  GradedMatrixForm a(p, q, gens);
  for (unsigned m = 0; m < a.monomials(); ++m) a[m] = random_matrix(rng, p + q, p + q);
  return a;
}

// Random a of homogeneous total parity (+1 even, -1 odd).
inline GradedMatrixForm random_homogeneous(std::mt19937_64& rng, int p, int q,
                                           int gens, int parity) {
  GradedMatrixForm a = random_graded(rng, p, q, gens);
  for (unsigned m = 0; m < a.monomials(); ++m) {
    int deg = __builtin_popcount(m);
    for (int i = 0; i < p + q; ++i)
      for (int j = 0; j < p + q; ++j) {
        int bp = (i >= p) + (j >= p);
        int tot = (deg + bp) % 2;
        if ((parity == 1 && tot == 1) || (parity == -1 && tot == 0))
          a[m](i, j) = 0.0;
      }
  }
  return a;
}

// Random a homogeneous in exterior-degree parity and block parity separately
// (0 even, 1 odd each).
inline GradedMatrixForm random_bihomogeneous(std::mt19937_64& rng, int p, int q,
                                             int gens, int ext_par, int block_par) {
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

}  // namespace oracle
