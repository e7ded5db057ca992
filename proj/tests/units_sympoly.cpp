#include "doctest.h"

#include "csanyon/solver.hpp"
#include "csanyon/sympoly.hpp"
#include "csanyon/vertex.hpp"

using namespace csanyon;

namespace {
const Scalar kSqrt2 = Scalar::sqrt_rational(Rat(2));

SymPoly mono(int N, const Partition& lam, const Scalar& c) {
  SymPoly p = sym_zero(N, partition_weight(lam));
  sym_add(p, lam, c);
  return p;
}
}  // namespace

TEST_CASE("two routes to the eta polynomial agree") {
  for (const auto& n : {std::vector<int>{1, 0}, {1, 1}, {2, 1}, {1, 1, 1}}) {
    const int N = static_cast<int>(n.size());
    CHECK(poly_from_eta(kSqrt2, n) ==
          poly_from_fock(kSqrt2, build_eta(kSqrt2, n).vec, N));
  }
  // anchor: n = (1,0) gives nu^2 m_(1)
  CHECK(poly_from_eta(kSqrt2, {1, 0}) == mono(2, {1}, Scalar(2)));
}

TEST_CASE("assembled eigen-polynomial at nu^2 = 2, n = (1,1)") {
  const EigenResult r = build_eigenvector(kSqrt2, {1, 1});
  CHECK(poly_from_fock(kSqrt2, r.psi, 2) == mono(2, {1, 1}, Scalar(Rat(8, 3))));
}

TEST_CASE("oracle eigenvalue on the dominant monomial") {
  // sum lambda_i^2 + nu^2 lambda_i (N + 1 - 2i)
  CHECK(cs_eigenvalue(kSqrt2, {1, 1}, 2) == Scalar(2));
  CHECK(cs_eigenvalue(kSqrt2, {2}, 2) == Scalar(8));
  CHECK(cs_eigenvalue(Scalar(1), {2, 1}, 3) == Scalar(9));
}

TEST_CASE("oracle operator fixes its eigenpolynomials") {
  for (const Partition& lam : {Partition{2}, {1, 1}, {2, 1}}) {
    const int N = 3;
    const SymPoly j = jack_polynomial(kSqrt2, lam, N);
    CHECK(cs_apply(kSqrt2, j) == j * cs_eigenvalue(kSqrt2, lam, N));
  }
}

TEST_CASE("closed-form oracle polynomials") {
  CHECK(jack_polynomial(kSqrt2, {1, 1}, 2) == mono(2, {1, 1}, Scalar(1)));
  // (2): m_2 + (2 nu^2/(nu^2+1)) m_11
  SymPoly j2 = mono(2, {2}, Scalar(1));
  sym_add(j2, {1, 1}, Scalar(Rat(4, 3)));
  CHECK(jack_polynomial(kSqrt2, {2}, 2) == j2);
  // nu = 1 collapses to Schur
  SymPoly s21 = mono(3, {2, 1}, Scalar(1));
  sym_add(s21, {1, 1, 1}, Scalar(2));
  CHECK(jack_polynomial(Scalar(1), {2, 1}, 3) == s21);
}

TEST_CASE("proportionality ratios at nu^2 = 2") {
  struct Row {
    std::vector<int> n;
    Rat ratio;
  };
  const Row rows[] = {{{1, 1}, Rat(8, 3)},
                      {{2, 0}, Rat(3)},
                      {{2, 1}, Rat(5)},
                      {{3, 1}, Rat(36, 5)},
                      {{2, 2, 1}, Rat(70, 9)}};
  for (const Row& r : rows) {
    const JackCompare c = jack_compare(kSqrt2, r.n);
    CHECK(c.match);
    CHECK(c.ratio == Scalar(r.ratio));
  }
}

TEST_CASE("monomial expansion round trip") {
  SymPoly p = mono(3, {2, 1}, kSqrt2);
  sym_add(p, {1, 1, 1}, Scalar(5));
  const auto raw = sym_monomials(p);
  CHECK(raw.at({2, 1, 0}) == kSqrt2);
  CHECK(raw.at({0, 1, 2}) == kSqrt2);
  CHECK(raw.at({1, 1, 1}) == Scalar(5));
  CHECK(raw.size() == 7);  // 6 orbit points of (2,1,0) + 1
  CHECK(sym_collect(3, 3, raw) == p);
}

TEST_CASE("power sums multiply") {
  // p_1^2 = m_2 + 2 m_11
  const SymPoly p1 = power_sum_poly(1, 2);
  SymPoly want = mono(2, {2}, Scalar(1));
  sym_add(want, {1, 1}, Scalar(2));
  CHECK(sym_mul(p1, p1) == want);
}
