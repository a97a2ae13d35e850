#include "doctest.h"
#include "eqforms/super_exp.hpp"
#include "oracles.hpp"

using namespace eqf;

TEST_CASE("wedge unit and antisymmetry") {
  ExteriorElement dx = ExteriorElement::monomial(2, 1u);
  ExteriorElement dy = ExteriorElement::monomial(2, 2u);
  ExteriorElement one = ExteriorElement::scalar(2, 1.0);
  CHECK(wedge(dx, one).at(1) == cplx(1.0));
  CHECK(wedge(dx, dy).at(3) == cplx(1.0));
  CHECK(wedge(dy, dx).at(3) == cplx(-1.0));
  CHECK(wedge(dx, dx).is_zero());
}

TEST_CASE("wedge vs brute-force permutation oracle") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    int gens = 1 + int(rng() % 4);
    ExteriorElement a = oracle::random_exterior(rng, gens);
    ExteriorElement b = oracle::random_exterior(rng, gens);
    ExteriorElement diff = wedge(a, b) - oracle::wedge_bruteforce(a, b);
    CHECK(diff.norm() <= 1e-12);
  }
  for (int it = 0; it < 100; ++it) {
    int gens = 1 + int(rng() % 3);
    int p = 1 + int(rng() % 2), q = 1 + int(rng() % 2);
    GradedMatrixForm a = oracle::random_graded(rng, p, q, gens);
    GradedMatrixForm b = oracle::random_graded(rng, p, q, gens);
    GradedMatrixForm c = wedge_product(a, b) - oracle::wedge_bruteforce(a, b);
    CHECK(graded_norm(c) <= 1e-10);
  }
}

TEST_CASE("associativity") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    GradedMatrixForm a = oracle::random_graded(rng, 2, 1, 3);
    GradedMatrixForm b = oracle::random_graded(rng, 2, 1, 3);
    GradedMatrixForm c = oracle::random_graded(rng, 2, 1, 3);
    GradedMatrixForm l = wedge_product(wedge_product(a, b), c);
    GradedMatrixForm r = wedge_product(a, wedge_product(b, c));
    CHECK(graded_norm(l - r) <= 1e-9 * (1.0 + graded_norm(l)));
  }
}

TEST_CASE("supertrace basics") {
  GradedMatrixForm id = GradedMatrixForm::identity(3, 2, 2);
  CHECK(supertrace(id).at(0) == cplx(1.0));
  CHECK(std::abs(supertrace(id)[0] - cplx(1.0)) < 1e-15);

  std::mt19937_64 rng(5);
  GradedMatrixForm odd = oracle::random_homogeneous(rng, 2, 2, 0, -1);
  CHECK(supertrace(odd).norm() <= 1e-15);
}

TEST_CASE("supertrace graded cyclicity") {
  // In the matrix-of-forms product the sign comes from the factor parities:
  // Str(ab) = (-1)^{da db + |A||B|} Str(ba).
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    int p = 1 + int(rng() % 2), q = 1 + int(rng() % 2);
    int gens = int(rng() % 3);
    int ea = int(rng() % 2), eb = int(rng() % 2);
    int ka = int(rng() % 2), kb = int(rng() % 2);
    GradedMatrixForm a = oracle::random_bihomogeneous(rng, p, q, gens, ea, ka);
    GradedMatrixForm b = oracle::random_bihomogeneous(rng, p, q, gens, eb, kb);
    double sign = ((ea * eb + ka * kb) % 2) ? -1.0 : 1.0;
    ExteriorElement d = supertrace(wedge_product(a, b)) -
                        sign * supertrace(wedge_product(b, a));
    CHECK(d.norm() <= 1e-10);
  }
}

TEST_CASE("graded norm") {
  GradedMatrixForm z(2, 1, 2);
  CHECK(graded_norm(z) == 0.0);
  CHECK(graded_norm(GradedMatrixForm::identity(2, 1, 2)) == doctest::Approx(1.0));
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    GradedMatrixForm a = oracle::random_graded(rng, 2, 1, 2);
    GradedMatrixForm b = oracle::random_graded(rng, 2, 1, 2);
    CHECK(graded_norm(wedge_product(a, b)) <=
          graded_norm(a) * graded_norm(b) + 1e-12);
  }
}

TEST_CASE("nilpotency of positive-degree elements") {
  std::mt19937_64 rng(19);
  for (int gens = 1; gens <= 4; ++gens) {
    GradedMatrixForm w = oracle::random_graded(rng, 2, 1, gens);
    w[0].setZero();
    GradedMatrixForm p = GradedMatrixForm::identity(2, 1, gens);
    for (int k = 0; k <= gens; ++k) p = wedge_product(p, w);
    CHECK(graded_norm(p) == 0.0);
  }
}

TEST_CASE("smallest eigenvalue") {
  Matc r = Matc::Zero(2, 2);
  r(0, 0) = 1.0;
  r(1, 1) = 3.0;
  CHECK(smallest_eigenvalue(r) == doctest::Approx(1.0));
  CHECK(smallest_eigenvalue(Matc::Zero(3, 3)) == doctest::Approx(0.0));
  std::mt19937_64 rng(23);
  for (int it = 0; it < 20; ++it) {
    Matc a = oracle::random_matrix(rng, 4, 4);
    Matc h = a + a.adjoint();
    Eigen::SelfAdjointEigenSolver<Matc> es(h);
    CHECK(smallest_eigenvalue(h) == doctest::Approx(es.eigenvalues().minCoeff()));
    // the operator norm of e^{-R} is e^{-m(R)}
    Matc e = (-h).exp();
    Eigen::JacobiSVD<Matc> svd(e);
    CHECK(svd.singularValues()(0) ==
          doctest::Approx(std::exp(-smallest_eigenvalue(h))).epsilon(1e-9));
  }
}

TEST_CASE("divided differences") {
  CHECK(std::abs(exp_divided_difference({1.0}) - std::exp(1.0)) < 1e-14);
  // [x, x] = e^x, [x, x, x] = e^x / 2
  CHECK(std::abs(exp_divided_difference({0.3, 0.3}) - std::exp(0.3)) < 1e-12);
  CHECK(std::abs(exp_divided_difference({0.3, 0.3, 0.3}) - 0.5 * std::exp(0.3)) <
        1e-12);
  // [a, b] = (e^a - e^b) / (a - b)
  cplx a(0.2, 1.0), b(-0.5, 0.3);
  CHECK(std::abs(exp_divided_difference({a, b}) -
                 (std::exp(a) - std::exp(b)) / (a - b)) < 1e-12);
}

TEST_CASE("super exponential trivial cases") {
  GradedMatrixForm z(2, 1, 2);
  GradedMatrixForm e = super_exponential(z);
  CHECK(graded_norm(e - GradedMatrixForm::identity(2, 1, 2)) <= 1e-14);

  // 1x1, a = c + dx^dy: e^a = e^c (1 + dx^dy)
  GradedMatrixForm a(1, 0, 2);
  a[0](0, 0) = cplx(0.4, -0.2);
  a[3](0, 0) = 1.0;
  GradedMatrixForm ea = super_exponential(a);
  cplx ec = std::exp(cplx(0.4, -0.2));
  CHECK(std::abs(ea[0](0, 0) - ec) < 1e-14);
  CHECK(std::abs(ea[3](0, 0) - ec) < 1e-14);
  CHECK(std::abs(ea[1](0, 0)) < 1e-15);
}

TEST_CASE("super exponential vs dense-representation oracle") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 60; ++it) {
    int gens = 1 + int(rng() % 4);
    int p = 1 + int(rng() % 3), q = int(rng() % 3);
    if (p + q > 3) q = 0;
    GradedMatrixForm a = oracle::random_graded(rng, p, q, gens);
    GradedMatrixForm got = super_exponential(a);
    GradedMatrixForm want = oracle::exp_dense_rep(a);
    CHECK(oracle::rel_error(got, want) <= 1e-9);
  }
}

TEST_CASE("super exponential with defective degree-0 block") {
  // Jordan block forces the block-bidiagonal fallback.
  std::mt19937_64 rng(31);
  for (int it = 0; it < 10; ++it) {
    GradedMatrixForm a = oracle::random_graded(rng, 1, 1, 2);
    Matc j = Matc::Zero(2, 2);
    j(0, 0) = j(1, 1) = cplx(0.3, 0.1);
    j(0, 1) = 1.0;
    a[0] = j;
    GradedMatrixForm got = super_exponential(a);
    GradedMatrixForm want = oracle::exp_dense_rep(a);
    CHECK(oracle::rel_error(got, want) <= 1e-9);
  }
}

TEST_CASE("norm bound for the graded exponential") {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> d;
  for (int it = 0; it < 100; ++it) {
    int gens = 1 + int(rng() % 3);
    int n = 2 + int(rng() % 2);
    // R Hermitian, S anti-Hermitian commuting with R, T positive degree
    Matc u = oracle::random_matrix(rng, n, n);
    Eigen::HouseholderQR<Matc> qr(u);
    Matc qmat = qr.householderQ();
    Eigen::VectorXd rd(n), sd(n);
    for (int i = 0; i < n; ++i) {
      rd(i) = std::abs(d(rng));
      sd(i) = d(rng);
    }
    Matc r = qmat * rd.cast<cplx>().asDiagonal() * qmat.adjoint();
    Matc s = qmat * (cplx(0.0, 1.0) * sd.cast<cplx>()).asDiagonal() * qmat.adjoint();
    GradedMatrixForm t(n - 1, 1, gens);
    for (unsigned m = 1; m < t.monomials(); ++m)
      t[m] = 0.5 * oracle::random_matrix(rng, n, n);
    GradedMatrixForm a = t;
    a[0] = -r + s;
    double lhs = graded_norm(super_exponential(a));
    double rhs = volterra_norm_bound(r, s, t);
    CHECK(lhs <= rhs * (1.0 + 1e-10));
  }
}

TEST_CASE("parity bookkeeping") {
  std::mt19937_64 rng(41);
  GradedMatrixForm even = oracle::random_homogeneous(rng, 2, 1, 2, 1);
  GradedMatrixForm odd = oracle::random_homogeneous(rng, 2, 1, 2, -1);
  CHECK(total_parity(even) == 1);
  CHECK(total_parity(odd) == -1);
  CHECK(total_parity(even + odd) == 0);
}

TEST_CASE("hermitian part") {
  std::mt19937_64 rng(43);
  GradedMatrixForm a = oracle::random_graded(rng, 2, 1, 2);
  Matc h = hermitian_part(a);
  CHECK((h - h.adjoint()).norm() <= 1e-14);
  CHECK((h - 0.5 * (a[0] + a[0].adjoint())).norm() <= 1e-14);
}
