#include "doctest.h"

#include "csanyon/vertex.hpp"

using namespace csanyon;

TEST_CASE("zero mode shifts the charge vacuum") {
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  for (int l = -2; l <= 2; ++l)
    CHECK(vertex_mode(nu, 0, FockVector::vacuum(l)) == FockVector::vacuum(l + 1));
}

TEST_CASE("mode coefficients on the vacuum") {
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  const FockVector v = vertex_mode(nu, 2, FockVector::vacuum(0));
  // clouds with sum j*m_j = 2: b_{-1}^2 at nu^2/2, b_{-2} at nu/2
  CHECK(v.coefficient({1, {1, 1}}) == Scalar(1));
  CHECK(v.coefficient({1, {2}}) == nu * Scalar(Rat(1, 2)));
  CHECK(v.size() == 2);
  // negative momentum on the vacuum annihilates
  CHECK(vertex_mode(nu, -1, FockVector::vacuum(0)).is_zero());
}

TEST_CASE("eta lives in charge N at level sum n") {
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  const EtaState e = build_eta(nu, {2, 1});
  CHECK(!e.vec.is_zero());
  CHECK(e.vec.homogeneous_charge() == 2);
  CHECK(e.vec.homogeneous_level() == 3);
}

TEST_CASE("support filter is necessary for a nonzero eta") {
  CHECK(support_filter({1, 1}));
  CHECK(support_filter({0, 0, 0}));
  CHECK(!support_filter({-1}));
  CHECK(!support_filter({0, -1}));
  // filter failure forces exact vanishing
  const Scalar nu(Rat(3, 2));
  CHECK(build_eta(nu, {0, -1}).vec.is_zero());
  CHECK(build_eta(nu, {-2, 1}).vec.is_zero());
}

TEST_CASE("anyon momenta") {
  const Scalar s2 = Scalar::sqrt_rational(Rat(2));
  const auto p = anyon_momenta(s2, {1, 0});  // nu^2 = 2, N = 2
  REQUIRE(p.size() == 2);
  CHECK(p[0] == Scalar(4));
  CHECK(p[1] == Scalar(1));

  const auto q = anyon_momenta(Scalar(1), {0, 0});
  CHECK(q[0] == Scalar(Rat(3, 2)));
  CHECK(q[1] == Scalar(Rat(1, 2)));

  // N = 1 ground state momentum is nu^2/2
  const auto r = anyon_momenta(Scalar(Rat(1, 2)), {0});
  CHECK(r[0] == Scalar(Rat(1, 8)));
}
