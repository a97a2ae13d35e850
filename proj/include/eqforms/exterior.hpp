#pragma once

// Complex exterior algebra on up to 8 anticommuting generators.
// An element is stored densely: coefficient per monomial, monomials indexed
// by bitmask (bit i set = generator i present, factors in ascending order).

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eqf {

using cplx = std::complex<double>;

constexpr int kMaxGenerators = 8;

// Sign of e_A ^ e_B for disjoint masks A, B, both written in ascending
// order: parity of the number of pairs (a in A, b in B) with a > b.
inline int koszul_sign(unsigned a, unsigned b) {
  int inv = 0;
  for (unsigned m = b; m; m &= m - 1) {
    int bit = __builtin_ctz(m);
    inv += __builtin_popcount(a >> (bit + 1));
  }
  return (inv & 1) ? -1 : 1;
}

class ExteriorElement {
 public:
  ExteriorElement() : n_(0), c_(1, cplx(0.0)) {}
  explicit ExteriorElement(int n_generators)
      : n_(n_generators), c_(std::size_t(1) << n_generators, cplx(0.0)) {
    if (n_generators < 0 || n_generators > kMaxGenerators)
      throw std::invalid_argument("ExteriorElement: generator count out of range");
  }

  static ExteriorElement scalar(int n, cplx v) {
    ExteriorElement e(n);
    e.c_[0] = v;
    return e;
  }
  static ExteriorElement monomial(int n, unsigned mask, cplx v = 1.0) {
    ExteriorElement e(n);
    e.at(mask) = v;
    return e;
  }

  int generators() const { return n_; }
  std::size_t size() const { return c_.size(); }

  cplx& at(unsigned mask) {
    if (mask >= c_.size()) throw std::out_of_range("ExteriorElement::at");
    return c_[mask];
  }
  cplx at(unsigned mask) const {
    if (mask >= c_.size()) throw std::out_of_range("ExteriorElement::at");
    return c_[mask];
  }
  cplx operator[](unsigned mask) const { return c_[mask]; }
  cplx& operator[](unsigned mask) { return c_[mask]; }

  ExteriorElement& operator+=(const ExteriorElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  ExteriorElement& operator-=(const ExteriorElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  ExteriorElement& operator*=(cplx s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(ExteriorElement a, cplx s) { return a *= s; }
  friend ExteriorElement operator*(cplx s, ExteriorElement a) { return a *= s; }

  // Wedge product with full Koszul signs.
  friend ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
    a.check_same(b);
    ExteriorElement out(a.n_);
    const unsigned full = unsigned(a.c_.size()) - 1;
    for (unsigned ma = 0; ma <= full; ++ma) {
      cplx ca = a.c_[ma];
      if (ca == cplx(0.0)) continue;
      unsigned rest = full & ~ma;
      // enumerate submasks of the complement, plus the empty mask
      unsigned mb = rest;
      while (true) {
        cplx cb = b.c_[mb];
        if (cb != cplx(0.0))
          out.c_[ma | mb] += double(koszul_sign(ma, mb)) * ca * cb;
        if (mb == 0) break;
        mb = (mb - 1) & rest;
      }
    }
    return out;
  }

  // Sum of coefficient magnitudes; submultiplicative companion of the
  // graded matrix norm.
  double norm() const {
    double s = 0.0;
    for (const auto& v : c_) s += std::abs(v);
    return s;
  }

  double max_abs() const {
    double s = 0.0;
    for (const auto& v : c_) s = std::max(s, std::abs(v));
    return s;
  }

  bool is_zero(double tol = 0.0) const {
    for (const auto& v : c_)
      if (std::abs(v) > tol) return false;
    return true;
  }

  // -1 odd, +1 even, 0 mixed or zero element with no parity assigned
  int parity() const {
    bool even = false, odd = false;
    for (unsigned m = 0; m < c_.size(); ++m)
      if (c_[m] != cplx(0.0)) {
        if (__builtin_popcount(m) & 1) odd = true; else even = true;
      }
    if (even && !odd) return 1;
    if (odd && !even) return -1;
    return 0;
  }

 private:
  void check_same(const ExteriorElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ExteriorElement: generator count mismatch");
  }
  int n_;
  std::vector<cplx> c_;
};

}  // namespace eqf
