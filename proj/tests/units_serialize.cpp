#include "doctest.h"

#include <algorithm>
#include <string>

#include "csanyon/serialize.hpp"
#include "csanyon/solver.hpp"
#include "csanyon/sympoly.hpp"
#include "csanyon/wavefunction.hpp"
#include "csanyon/wcharges.hpp"

using namespace csanyon;

namespace {
const Scalar kSqrt2 = Scalar::sqrt_rational(Rat(2));

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}
}  // namespace

TEST_CASE("scalar round trip") {
  const Scalar c = Scalar(Rat(1, 3)) + Scalar(Rat(-5, 2)) * kSqrt2;
  CHECK(scalar_from_json(scalar_to_json(c)) == c);
  CHECK(contains(scalar_to_json(c), "\"r\": \"2\""));
}

TEST_CASE("fock vector round trip keeps the radicand") {
  FockVector v = FockVector::basis({2, {1, 1}}, Scalar(Rat(2, 3)));
  v.add({2, {2}}, Scalar(Rat(0), Rat(-2, 3), Rat(2)));
  const std::string text = fock_to_json(v);
  CHECK(fock_from_json(text) == v);
  // full sector basis is listed even where the coefficient vanishes
  CHECK(contains(text, "\"basis\""));
  CHECK(contains(text, "\"radicand\": \"2\""));
  // identical input, identical bytes
  CHECK(fock_to_json(v) == text);
}

TEST_CASE("operator round trip") {
  const auto h3 = make_operator(ChargeKind::H3, kSqrt2, 3);
  const std::string text = op_to_json(h3);
  const auto back = op_from_json(text);
  CHECK(op_to_json(back) == text);
}

TEST_CASE("eigen result round trip and frozen fields") {
  const EigenResult r = build_eigenvector(kSqrt2, {1, 1});
  const std::string text = eigen_to_json(r);
  CHECK(contains(text, "\"nu2\": \"2\""));
  CHECK(contains(text, "\"E\": {\n    \"a\": \"20\""));
  CHECK(contains(text, "\"certified\": true"));
  const EigenResult back = eigen_from_json(text);
  CHECK(back.nu == r.nu);
  CHECK(back.n == r.n);
  CHECK(back.energy == r.energy);
  CHECK(back.psi == r.psi);
  CHECK(back.certified == r.certified);
  REQUIRE(back.alpha.size() == r.alpha.size());
  for (size_t i = 0; i < r.alpha.size(); ++i) {
    CHECK(back.alpha[i].mu == r.alpha[i].mu);
    CHECK(back.alpha[i].value == r.alpha[i].value);
  }
}

TEST_CASE("symmetric polynomial round trip") {
  SymPoly p = sym_zero(3, 3);
  sym_add(p, {2, 1}, kSqrt2);
  sym_add(p, {1, 1, 1}, Scalar(Rat(-7, 4)));
  CHECK(sympoly_from_json(sympoly_to_json(p)) == p);
}

TEST_CASE("wavefunction sample csv") {
  const EigenResult r = build_eigenvector(Scalar(1), {1, 0});
  const WaveFunctionSpec ws = assemble_eigenfunction(r, 0, 6.0);
  const auto pts = random_admissible_points(2, 6.0, 3, 42);
  const std::string csv = wf_eval_csv(ws, pts);
  CHECK(contains(csv, "x1,x2,re_psi,im_psi,residual\n"));
  // header + 3 rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("correlation csv") {
  CorrSpec s;
  s.L = 7.0;
  s.nu0 = 1.0;
  s.charges = {1, -1};
  s.x = {1.0, -1.0};
  s.eps = {0.01, 0.01};
  const std::string csv = corr_csv({s, s});
  CHECK(contains(csv, "x1,x2,eps1,eps2,re_c,im_c\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
