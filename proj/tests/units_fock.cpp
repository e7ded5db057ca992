#include "doctest.h"

#include <stdexcept>

#include "csanyon/fock.hpp"

using namespace csanyon;

namespace {
FockVector state(int charge, Partition parts) {
  return FockVector::basis({charge, std::move(parts)});
}
}  // namespace

TEST_CASE("modes annihilate the vacuum and build states") {
  const FockVector vac = FockVector::vacuum(0);
  CHECK(apply_mode(3, vac).is_zero());
  CHECK(apply_mode(-2, vac) == state(0, {2}));
  CHECK(apply_mode(-1, apply_mode(-2, vac)) == state(0, {2, 1}));
  // removing a part picks up m * multiplicity
  CHECK(apply_mode(1, state(0, {1, 1})) == Scalar(2) * state(0, {1}));
  CHECK(apply_mode(2, state(0, {2, 1})) == Scalar(2) * state(0, {1}));
}

TEST_CASE("zero mode is rejected") {
  CHECK_THROWS(apply_mode(0, FockVector::vacuum(1)));
}

TEST_CASE("commutator on a sample state") {
  const FockVector v = state(1, {3, 1});
  for (int m : {-3, -1, 2, 3})
    for (int n : {-2, 1, 3}) {
      const FockVector lhs =
          apply_mode(m, apply_mode(n, v)) - apply_mode(n, apply_mode(m, v));
      const FockVector rhs =
          (m + n == 0) ? v * Scalar(static_cast<long>(m)) : FockVector();
      CHECK(lhs == rhs);
    }
}

TEST_CASE("norms and orthogonality") {
  CHECK(state_norm2({0, {}}) == Scalar(1));
  CHECK(state_norm2({0, {1, 1}}) == Scalar(2));      // 1^2 * 2!
  CHECK(state_norm2({2, {2, 1}}) == Scalar(2));      // 2 * 1
  CHECK(state_norm2({0, {3, 3, 2}}) == Scalar(36));  // 3^2 2! * 2
  CHECK(inner(state(0, {2}), state(0, {1, 1})) == Scalar(0));
  CHECK(inner(state(1, {1}), state(-1, {1})) == Scalar(0));
  // adjointness: <b_{-m} u, v> = <u, b_m v>
  const FockVector u = state(0, {2, 1});
  const FockVector v = state(0, {2, 2, 1});
  CHECK(inner(apply_mode(-2, u), v) == inner(u, apply_mode(2, v)));
}

TEST_CASE("operator terms act annihilators first, then Q, then creators") {
  NormalOrderedOp op;
  op.terms.push_back({Scalar(1), {1}, 2, {1}});  // b_{-1} Q^2 b_1
  const FockVector v = state(3, {1});
  CHECK(apply_op(op, v) == Scalar(9) * v);
  CHECK(apply_op(op, state(3, {2})).is_zero());
}

TEST_CASE("sector matrix of a diagonal operator") {
  // b_{-m} b_m on a basis state contributes m * multiplicity(m).
  NormalOrderedOp op;
  op.terms.push_back({Scalar(1), {1}, 0, {1}});
  op.terms.push_back({Scalar(1), {2}, 0, {2}});
  const auto m = sector_matrix(op, 0, 2);  // basis (1,1), (2)
  REQUIRE(m.size() == 2);
  CHECK(m[0][0] == Scalar(2));  // b_{-1}b_1 on (1,1): 1 * mult 2
  CHECK(m[1][1] == Scalar(2));  // b_{-2}b_2 on (2): 2 * mult 1
  CHECK(m[0][1] == Scalar(0));
  CHECK(m[1][0] == Scalar(0));
}

TEST_CASE("gram matrix is the diagonal of state norms") {
  const auto g = sector_gram(0, 3);  // (1,1,1), (2,1), (3)
  REQUIRE(g.size() == 3);
  CHECK(g[0][0] == Scalar(6));
  CHECK(g[1][1] == Scalar(2));
  CHECK(g[2][2] == Scalar(3));
  CHECK(g[0][1] == Scalar(0));
}

TEST_CASE("homogeneous charge and level") {
  FockVector v = state(2, {2, 1}) + state(2, {3});
  CHECK(v.homogeneous_charge() == 2);
  CHECK(v.homogeneous_level() == 3);
  v += state(2, {1});
  CHECK(!v.homogeneous_level().has_value());
  CHECK(!FockVector().homogeneous_charge().has_value());
}
