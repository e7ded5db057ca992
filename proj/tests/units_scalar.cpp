#include "doctest.h"

#include <stdexcept>

#include "csanyon/partition.hpp"
#include "csanyon/scalar.hpp"

using namespace csanyon;

TEST_CASE("rational strings canonicalize") {
  CHECK(rat_to_string(rat_from_string("2/4")) == "1/2");
  CHECK(rat_to_string(rat_from_string("-6/3")) == "-2");
  CHECK(rat_to_string(rat_from_string("20")) == "20");
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("quadratic field arithmetic") {
  const Scalar s2 = Scalar::sqrt_rational(Rat(2));
  const Scalar one(1);
  CHECK((one + s2) * (one - s2) == Scalar(-1));
  CHECK(s2 * s2 == Scalar(2));
  CHECK(s2.inverse() * s2 == one);
  CHECK(s2.pow(4) == Scalar(4));
  // sqrt of a perfect square collapses to the rational.
  CHECK(Scalar::sqrt_rational(Rat(9, 4)) == Scalar(Rat(3, 2)));
  CHECK(Scalar::sqrt_rational(Rat(9, 4)).is_rational());
}

TEST_CASE("distinct radicands do not mix") {
  const Scalar s2 = Scalar::sqrt_rational(Rat(2));
  const Scalar s3 = Scalar::sqrt_rational(Rat(3));
  CHECK_THROWS(s2 + s3);
  CHECK_THROWS(s2 * s3);
  // rationals (r = 0) combine with anything
  CHECK(Scalar(2) * s3 == s3 + s3);
}

TEST_CASE("exact and numeric modes stay separate") {
  const Scalar z = Scalar::numeric({1.0, 2.0});
  CHECK_THROWS(z + Scalar(1));
  CHECK_THROWS(z.rational());
  CHECK(z.to_complex() == std::complex<double>(1.0, 2.0));
}

TEST_CASE("partition enumeration is ascending lexicographic") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{1, 1, 1, 1});
  CHECK(p4[1] == Partition{2, 1, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{3, 1});
  CHECK(p4[4] == Partition{4});

  const auto p42 = partitions_of_max_len(4, 2);
  REQUIRE(p42.size() == 3);
  CHECK(p42[0] == Partition{2, 2});
  CHECK(p42[1] == Partition{3, 1});
  CHECK(p42[2] == Partition{4});

  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());
}

TEST_CASE("dominance order") {
  CHECK(dominates({2}, {1, 1}));
  CHECK(!dominates({1, 1}, {2}));
  CHECK(dominates({2, 2}, {2, 1, 1}));
  CHECK(dominates({3, 1}, {2, 2}));
  CHECK(dominates({2, 1}, {2, 1}));
}

TEST_CASE("multiplicities") {
  const auto m = part_multiplicities({3, 2, 2, 1});
  CHECK(m.at(3) == 1);
  CHECK(m.at(2) == 2);
  CHECK(m.at(1) == 1);
}
