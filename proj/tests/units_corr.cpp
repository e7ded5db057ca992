#include "doctest.h"

#include <cmath>
#include <complex>

#include "csanyon/corr.hpp"

using namespace csanyon;

namespace {
constexpr double kPi = 3.14159265358979323846;

CorrSpec pair_spec(double nu0, double L) {
  CorrSpec s;
  s.L = L;
  s.nu0 = nu0;
  s.charges = {1, -1};
  s.x = {0.9, -1.3};
  s.eps = {0.02, 0.05};
  return s;
}
}  // namespace

TEST_CASE("pair factor anchors and dual form") {
  const double L = 5.0;
  CHECK(std::abs(b_factor(L / 2, 0, L) - std::complex<double>(0, -2)) < 1e-15);
  CHECK(std::abs(b_factor(0, 0, L)) == 0.0);
  CHECK(std::abs(b_factor(L, 0, L)) == 0.0);  // periodic zero
  for (double x : {-2.2, -0.4, 0.7, 1.9})
    for (double eps : {0.0, 1e-7, 0.3}) {
      const auto direct = b_factor(x, eps, L);
      const auto closed = std::complex<double>(0, -2.0) *
                          std::exp(-kPi * eps / L) *
                          std::sin(kPi * std::complex<double>(x, eps) / L);
      CHECK(std::abs(direct - closed) < 1e-14);
      if (eps > 0 || x != 0.0)
        CHECK(std::abs(std::exp(log_b_factor(x, eps, L)) - direct) < 1e-14);
    }
}

TEST_CASE("smoothed sign function") {
  const double L = 2 * kPi;
  CHECK(sgn_reg(L / 4, 1e-8, L) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sgn_reg(-L / 4, 1e-8, L) == doctest::Approx(-1.0).epsilon(1e-6));
  // exactly odd
  for (double x : {0.3, 1.1, 2.9}) {
    CHECK(sgn_reg(x, 0.05, L) + sgn_reg(-x, 0.05, L) == 0.0);
    CHECK(std::abs(sgn_reg(x, 0.05, L) - sgn_reg_series(x, 0.05, L, 4000)) <
          1e-12);
  }
  CHECK(sgn_reg(0.0, 0.1, L) == 0.0);
}

TEST_CASE("charge selector") {
  CorrSpec s = pair_spec(1.0, 7.0);
  CHECK(std::abs(corr_eval(s)) > 0.0);
  s.charges = {1, 1};  // total charge 2 with w1 = w2 = 0
  CHECK(corr_eval(s) == std::complex<double>(0, 0));
  s.w1 = -2;
  CHECK(std::abs(corr_eval(s)) > 0.0);
}

TEST_CASE("translation invariance at zero winding") {
  CorrSpec s = pair_spec(0.7, 7.0);
  const auto c0 = corr_eval(s);
  for (double& xi : s.x) xi += 0.37;
  CHECK(std::abs(corr_eval(s) - c0) < 1e-14);
}

TEST_CASE("exchange relation residual is at rounding level") {
  for (double nu0 : {1.0, std::sqrt(0.5)}) {
    CorrSpec s = pair_spec(nu0, 2 * kPi);
    s.charges = {1, 1};
    s.w1 = -2;
    CHECK(exchange_residual(s, 1) < 1e-10);
  }
}

TEST_CASE("pair correlation links to the regularized ground factor") {
  // equal charges, w1 absorbing: |C| -> |b(x1-x2; 0)|^{nu^2} as eps -> 0
  CorrSpec s;
  s.L = 2 * kPi;
  s.nu0 = std::sqrt(0.5);
  s.charges = {1, 1};
  s.w1 = -2;
  s.x = {1.2, -0.8};
  s.eps = {1e-9, 1e-9};
  const double got = std::abs(corr_eval(s));
  const double want = std::abs(delta_power(0.5, s.x, s.L));
  CHECK(got == doctest::Approx(want).epsilon(1e-7));
}

TEST_CASE("braid relations") {
  CHECK(braid_check(3, 1.0, 0.05, 10));
  CHECK(braid_check(4, 1.0 / 3.0, 0.1, 10));
  // sigma_i^2 returns the configuration with unit phase
  BraidState st;
  st.x = {0.4, -0.2, 1.0};
  const BraidState once = braid_sigma(st, 1, 0.5, 0.05, 2 * kPi);
  const BraidState twice = braid_sigma(once, 1, 0.5, 0.05, 2 * kPi);
  CHECK(twice.x == st.x);
  CHECK(std::abs(twice.phase - std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("input validation") {
  CorrSpec s = pair_spec(1.0, 7.0);
  s.eps = {0.02};  // length mismatch
  CHECK_THROWS(corr_eval(s));
  s = pair_spec(1.0, 7.0);
  s.eps[0] = 0.0;
  CHECK_THROWS(corr_eval(s));
  s = pair_spec(-1.0, 7.0);
  CHECK_THROWS(corr_eval(s));
}
