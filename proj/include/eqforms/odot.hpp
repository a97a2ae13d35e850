#pragma once

// Graded tensor product of symbols: sigma1 (.) sigma2 acts on
// (E1 (x) E2)+ = E1+ (x) E2+  (+)  E1- (x) E2-  and its odd complement,
// assembled so that v_{s1 (.) s2} = v1 (x) 1 + 1 (x) v2 in the graded sense,
// giving v^2 = v1^2 (x) 1 + 1 (x) v2^2.

#include "eqforms/chern.hpp"

namespace eqf {

struct GradedTensorLayout {
  int p1, q1, p2, q2;
  std::vector<int> plus_pairs, minus_pairs;  // encoded i * n2 + j
  std::vector<int> position;                 // pair code -> index in [plus | minus]

  GradedTensorLayout(int p1_, int q1_, int p2_, int q2_)
      : p1(p1_), q1(q1_), p2(p2_), q2(q2_) {
    const int n1 = p1 + q1, n2 = p2 + q2;
    position.assign(n1 * n2, -1);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) {
        int par = ((i >= p1) + (j >= p2)) & 1;
        (par ? minus_pairs : plus_pairs).push_back(i * n2 + j);
      }
    for (std::size_t k = 0; k < plus_pairs.size(); ++k) position[plus_pairs[k]] = int(k);
    for (std::size_t k = 0; k < minus_pairs.size(); ++k)
      position[minus_pairs[k]] = int(plus_pairs.size() + k);
  }
  int dim_plus() const { return int(plus_pairs.size()); }
  int dim_minus() const { return int(minus_pairs.size()); }
};

// a (x) b with the Koszul sign (-1)^{|b| |u|} on basis vectors u of E1;
// parity_b is the block parity of b (0 even, 1 odd).
inline Matc graded_tensor(const GradedTensorLayout& lay, const Matc& a, const Matc& b,
                          int parity_b) {
  const int n1 = lay.p1 + lay.q1, n2 = lay.p2 + lay.q2;
  Matc out = Matc::Zero(n1 * n2, n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n1; ++k) {
      if (a(k, i) == cplx(0.0)) continue;
      double sign = (parity_b && i >= lay.p1) ? -1.0 : 1.0;
      for (int j = 0; j < n2; ++j)
        for (int l = 0; l < n2; ++l) {
          if (b(l, j) == cplx(0.0)) continue;
          out(lay.position[k * n2 + l], lay.position[i * n2 + j]) +=
              sign * a(k, i) * b(l, j);
        }
    }
  return out;
}

inline Matc odot_v(const GradedTensorLayout& lay, const Matc& v1, const Matc& v2) {
  const int n1 = lay.p1 + lay.q1, n2 = lay.p2 + lay.q2;
  return graded_tensor(lay, v1, Matc::Identity(n2, n2), 0) +
         graded_tensor(lay, Matc::Identity(n1, n1), v2, 1);
}

inline SymbolMorphism odot_product(const SymbolMorphism& s1, const SymbolMorphism& s2) {
  GradedTensorLayout lay(s1.dim_plus, s1.dim_minus, s2.dim_plus, s2.dim_minus);
  SymbolMorphism out;
  out.dim_plus = lay.dim_plus();
  out.dim_minus = lay.dim_minus();
  auto assemble = [lay, s1, s2](const Matc& m1, const Matc& m2) {
    const int p1 = lay.p1, q1 = lay.q1, p2 = lay.p2, q2 = lay.q2;
    Matc v1 = Matc::Zero(p1 + q1, p1 + q1);
    v1.block(0, p1, p1, q1) = m1.adjoint();
    v1.block(p1, 0, q1, p1) = m1;
    Matc v2 = Matc::Zero(p2 + q2, p2 + q2);
    v2.block(0, p2, p2, q2) = m2.adjoint();
    v2.block(p2, 0, q2, p2) = m2;
    Matc v = odot_v(lay, v1, v2);
    return Matc(v.block(lay.dim_plus(), 0, lay.dim_minus(), lay.dim_plus()));
  };
  out.eval = [assemble, s1, s2](const Vec& p) { return assemble(s1.eval(p), s2.eval(p)); };
  if (s1.partial && s2.partial) {
    out.partial = [assemble, s1, s2](const Vec& p, int i) {
      Matc z1 = Matc::Zero(s1.dim_minus, s1.dim_plus);
      Matc z2 = Matc::Zero(s2.dim_minus, s2.dim_plus);
      return Matc(assemble(s1.partial(p, i), z2) + assemble(z1, s2.partial(p, i)));
    };
  }
  return out;
}

// Tensor of degree-0 even endomorphisms (moments, fiber weights).
inline Matc odot_even(const GradedTensorLayout& lay, const Matc& m1, const Matc& m2) {
  const int n1 = lay.p1 + lay.q1, n2 = lay.p2 + lay.q2;
  return graded_tensor(lay, m1, Matc::Identity(n2, n2), 0) +
         graded_tensor(lay, Matc::Identity(n1, n1), m2, 0);
}

}  // namespace eqf
