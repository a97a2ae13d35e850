#pragma once

// Endomorphism-valued exterior forms on a super vector space E+ (+) E-.
// Stored as one dense (p+q) x (p+q) complex matrix per exterior monomial,
// basis ordered E+ first.  Products are matrix products with entrywise
// wedge; Koszul signs enter through the exterior factors only.

#include <Eigen/Dense>

#include "eqforms/exterior.hpp"

namespace eqf {

using Matc = Eigen::MatrixXcd;

class GradedMatrixForm {
 public:
  GradedMatrixForm() : p_(0), q_(0), n_(0) {}
  GradedMatrixForm(int dim_plus, int dim_minus, int n_generators)
      : p_(dim_plus), q_(dim_minus), n_(n_generators) {
    if (dim_plus < 0 || dim_minus < 0 || dim_plus + dim_minus == 0)
      throw std::invalid_argument("GradedMatrixForm: bad dimensions");
    if (n_generators < 0 || n_generators > kMaxGenerators)
      throw std::invalid_argument("GradedMatrixForm: generator count out of range");
    c_.assign(std::size_t(1) << n_generators, Matc::Zero(p_ + q_, p_ + q_));
  }

  static GradedMatrixForm identity(int p, int q, int n) {
    GradedMatrixForm a(p, q, n);
    a.c_[0] = Matc::Identity(p + q, p + q);
    return a;
  }
  // degree-0 element from a plain matrix
  static GradedMatrixForm from_matrix(int p, int q, int n, const Matc& m) {
    GradedMatrixForm a(p, q, n);
    if (m.rows() != p + q || m.cols() != p + q)
      throw std::invalid_argument("GradedMatrixForm::from_matrix: size mismatch");
    a.c_[0] = m;
    return a;
  }
  // scalar exterior element times identity
  static GradedMatrixForm from_scalar_form(int p, int q, const ExteriorElement& w) {
    GradedMatrixForm a(p, q, w.generators());
    for (unsigned m = 0; m < a.c_.size(); ++m)
      a.c_[m] = w[m] * Matc::Identity(p + q, p + q);
    return a;
  }

  int dim_plus() const { return p_; }
  int dim_minus() const { return q_; }
  int dim() const { return p_ + q_; }
  int generators() const { return n_; }
  std::size_t monomials() const { return c_.size(); }

  Matc& at(unsigned mask) {
    if (mask >= c_.size()) throw std::out_of_range("GradedMatrixForm::at");
    return c_[mask];
  }
  const Matc& at(unsigned mask) const {
    if (mask >= c_.size()) throw std::out_of_range("GradedMatrixForm::at");
    return c_[mask];
  }
  const Matc& operator[](unsigned mask) const { return c_[mask]; }
  Matc& operator[](unsigned mask) { return c_[mask]; }

  GradedMatrixForm& operator+=(const GradedMatrixForm& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  GradedMatrixForm& operator-=(const GradedMatrixForm& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  GradedMatrixForm& operator*=(cplx s) {
    for (auto& m : c_) m *= s;
    return *this;
  }
  friend GradedMatrixForm operator+(GradedMatrixForm a, const GradedMatrixForm& b) { return a += b; }
  friend GradedMatrixForm operator-(GradedMatrixForm a, const GradedMatrixForm& b) { return a -= b; }
  friend GradedMatrixForm operator*(GradedMatrixForm a, cplx s) { return a *= s; }
  friend GradedMatrixForm operator*(cplx s, GradedMatrixForm a) { return a *= s; }

  void check_same(const GradedMatrixForm& o) const {
    if (p_ != o.p_ || q_ != o.q_ || n_ != o.n_)
      throw std::invalid_argument("GradedMatrixForm: shape mismatch");
  }

 private:
  int p_, q_, n_;
  std::vector<Matc> c_;
};

// Matrix product with entrywise wedge.
inline GradedMatrixForm wedge_product(const GradedMatrixForm& a, const GradedMatrixForm& b) {
  a.check_same(b);
  GradedMatrixForm out(a.dim_plus(), a.dim_minus(), a.generators());
  const unsigned full = unsigned(a.monomials()) - 1;
  for (unsigned ma = 0; ma <= full; ++ma) {
    if (a[ma].isZero(0.0)) continue;
    unsigned rest = full & ~ma;
    unsigned mb = rest;
    while (true) {
      if (!b[mb].isZero(0.0))
        out[ma | mb] += double(koszul_sign(ma, mb)) * (a[ma] * b[mb]);
      if (mb == 0) break;
      mb = (mb - 1) & rest;
    }
  }
  return out;
}

inline GradedMatrixForm operator*(const GradedMatrixForm& a, const GradedMatrixForm& b) {
  return wedge_product(a, b);
}

// Str = tr over E+ minus tr over E-, per monomial.
inline ExteriorElement supertrace(const GradedMatrixForm& a) {
  ExteriorElement out(a.generators());
  for (unsigned m = 0; m < a.monomials(); ++m) {
    cplx s = 0.0;
    for (int i = 0; i < a.dim_plus(); ++i) s += a[m](i, i);
    for (int i = a.dim_plus(); i < a.dim(); ++i) s -= a[m](i, i);
    out[m] = s;
  }
  return out;
}

// The matrix-of-forms product represents the graded tensor algebra through
// the row-sign map that multiplies the E- rows of every odd-degree
// coefficient by -1.  Under that map the graded Str becomes the supertrace
// on even monomials and the plain trace on odd ones.
inline ExteriorElement supertrace_graded(const GradedMatrixForm& a) {
  ExteriorElement out(a.generators());
  for (unsigned m = 0; m < a.monomials(); ++m) {
    const bool odd = __builtin_popcount(m) & 1;
    cplx s = 0.0;
    for (int i = 0; i < a.dim_plus(); ++i) s += a[m](i, i);
    for (int i = a.dim_plus(); i < a.dim(); ++i)
      s += odd ? a[m](i, i) : -a[m](i, i);
    out[m] = s;
  }
  return out;
}

// Row-sign map itself: negate the E- rows of odd-degree coefficients.
inline GradedMatrixForm grading_twist(GradedMatrixForm a) {
  const int p = a.dim_plus(), q = a.dim_minus();
  for (unsigned m = 0; m < a.monomials(); ++m)
    if (__builtin_popcount(m) & 1) a[m].block(p, 0, q, p + q) *= -1.0;
  return a;
}

// Sum over monomials of the operator (spectral) norm of the coefficient.
inline double graded_norm(const GradedMatrixForm& a) {
  double s = 0.0;
  for (unsigned m = 0; m < a.monomials(); ++m) {
    if (a[m].isZero(0.0)) continue;
    Eigen::JacobiSVD<Matc> svd(a[m]);
    s += svd.singularValues()(0);
  }
  return s;
}

// Hermitian part of the degree-0 coefficient.
inline Matc hermitian_part(const GradedMatrixForm& a) {
  return 0.5 * (a[0] + a[0].adjoint());
}

inline double smallest_eigenvalue(const Matc& h) {
  Eigen::SelfAdjointEigenSolver<Matc> es(h);
  return es.eigenvalues()(0);
}

// Total parity: matrix-block parity plus exterior degree.  Returns +1 even,
// -1 odd, 0 mixed/zero.
inline int total_parity(const GradedMatrixForm& a, double tol = 0.0) {
  bool even = false, odd = false;
  for (unsigned m = 0; m < a.monomials(); ++m) {
    int deg = __builtin_popcount(m);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        if (std::abs(a[m](i, j)) <= tol) continue;
        int bp = (i >= a.dim_plus()) + (j >= a.dim_plus());
        if ((deg + bp) & 1) odd = true; else even = true;
      }
  }
  if (even && !odd) return 1;
  if (odd && !even) return -1;
  return 0;
}

}  // namespace eqf
