#include "doctest.h"

#include "csanyon/wcharges.hpp"

using namespace csanyon;

namespace {
bool same_matrix(const std::vector<std::vector<Scalar>>& a,
                 const std::vector<std::vector<Scalar>>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("cubic charge on small charge-1 sectors") {
  const auto w3 = make_operator(ChargeKind::W3, Scalar(1), 4);
  CHECK(same_matrix(sector_matrix(w3, 1, 0), {{Scalar(Rat(1, 4))}}));
  CHECK(same_matrix(sector_matrix(w3, 0, 0), {{Scalar(0)}}));
  // charge 1, level 2, basis (1,1), (2)
  const Scalar d(Rat(17, 4));
  CHECK(same_matrix(sector_matrix(w3, 1, 2), {{d, Scalar(2)}, {Scalar(2), d}}));
}

TEST_CASE("deformed cubic hamiltonian on the charge-1 level-2 sector") {
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  const auto h3 = make_operator(ChargeKind::H3, nu, 4);
  // [[2 + 2nu^2 + nu^4/4, 2nu], [2nu, 4 + nu^4/4]] at nu^2 = 2
  const Scalar off = Scalar(2) * nu;
  CHECK(same_matrix(sector_matrix(h3, 1, 2),
                    {{Scalar(7), off}, {off, Scalar(5)}}));
}

TEST_CASE("deformed charges reduce to the undeformed ones at nu = 1") {
  for (auto [kA, kB] : {std::pair{ChargeKind::Wnu2, ChargeKind::W2},
                        std::pair{ChargeKind::Wnu3, ChargeKind::W3}}) {
    const auto a = make_operator(kA, Scalar(1), 3);
    const auto b = make_operator(kB, Scalar(1), 3);
    for (int charge : {-1, 0, 2})
      for (int level : {0, 1, 2, 3})
        CHECK(same_matrix(sector_matrix(a, charge, level),
                          sector_matrix(b, charge, level)));
  }
}

TEST_CASE("quadratic charge is diagonal: charge^2/2 + level") {
  const auto w2 = make_operator(ChargeKind::W2, Scalar(1), 5);
  const auto m = sector_matrix(w2, 2, 3);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      CHECK(m[i][j] == (i == j ? Scalar(5) : Scalar(0)));  // 4/2 + 3
}

TEST_CASE("momentum-weighted number operator is diagonal: sum of squares") {
  const auto c = make_operator(ChargeKind::C, Scalar(1), 4);
  const auto m = sector_matrix(c, 0, 4);  // (1^4),(2,1,1),(2,2),(3,1),(4)
  const long want[] = {4, 6, 8, 10, 16};
  for (size_t i = 0; i < m.size(); ++i) CHECK(m[i][i] == Scalar(want[i]));
}

TEST_CASE("gamma factor") {
  CHECK(gamma_factor(Scalar(1)) == Scalar(0));
  CHECK(gamma_factor(Scalar::sqrt_rational(Rat(2))) == Scalar(4));
  CHECK(gamma_factor(Scalar(2)) == Scalar(24));
}

TEST_CASE("quadratic eigen relation and cubic ladder on spot inputs") {
  const Scalar nu(Rat(3, 2));
  CHECK(check_h2_eigen(nu, {2, 1}));
  CHECK(check_h2_eigen(nu, {0, 1, 2}));  // holds for any integer modes
  CHECK(check_h3_ladder(nu, {2, 1}));
  CHECK(check_h3_ladder(nu, {1, 1, 1}));
}
