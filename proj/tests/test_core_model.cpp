#include <doctest.h>

#include "swh/errors.hpp"
#include "swh/milnor.hpp"
#include "swh/singularity.hpp"

using swh::Monomial;
using swh::Rational;
using swh::Singularity;

TEST_CASE("unshifted degree") {
  CHECK(Singularity({4, 4, 4}).unshifted_degree({2, 2, 2}) == Rational(3, 2));
  CHECK(Singularity({6, 5}).unshifted_degree({0, 0}) == Rational(0));
  CHECK(Singularity({6, 5}).unshifted_degree({2, 4}) == Rational(17, 15));
  CHECK_THROWS_AS(Singularity({6, 5}).unshifted_degree({1, 2, 3}), swh::Error);
}

TEST_CASE("shifted degree") {
  CHECK(Singularity({4, 4, 4}).shifted_degree({0, 0, 0}) == Rational(3, 4));
  CHECK(Singularity({7, 5}).shifted_degree({3, 3}) == Rational(48, 35));
  CHECK(Singularity({6, 5}).shifted_degree({4, 3}) == Rational(49, 30));
  CHECK_THROWS_AS(Singularity({6, 5}).shifted_degree({1}), swh::Error);
}

TEST_CASE("rho") {
  CHECK(*Singularity({4, 4, 4}, {{{2, 2, 1}, Rational(1)}}).rho() == Rational(5, 4));
  CHECK(*Singularity({7, 5}, {{{3, 3}, Rational(1)}, {{5, 2}, Rational(1)}}).rho() == Rational(36, 35));
  CHECK_FALSE(Singularity({6, 5}).rho().has_value());
  CHECK_THROWS_AS(Singularity({6, 5}).rho_or_throw(), swh::Error);

  std::vector<int> a{3, 5, 7, 11, 13, 17}, e;
  Monomial m;
  Rational want(3, 2);
  for (int x : a) {
    e.push_back(2 * x);
    m.push_back((x - 1) / 2);
    want -= Rational(1, 4 * x);
  }
  CHECK(*Singularity(e, {{m, Rational(1)}}).rho() == want);
}

TEST_CASE("milnor number") {
  CHECK(Singularity({6, 5}).milnor_number() == 20);
  CHECK(Singularity({2, 2}).milnor_number() == 1);
  CHECK(Singularity({4, 4, 4}).milnor_number() == 27);
  uint64_t count = 0;
  swh::for_each_basis_monomial({4, 4, 4}, [&](const Monomial&) {
    ++count;
    return true;
  });
  CHECK(count == 27);
}

TEST_CASE("validate") {
  auto ok = Singularity({6, 5}, {{{2, 4}, Rational(1)}}).validate();
  CHECK(ok.valid);
  CHECK_FALSE(ok.weighted_homogeneous);

  auto low = Singularity({6, 5}, {{{1, 1}, Rational(1)}}).validate();
  CHECK_FALSE(low.valid);
  REQUIRE(low.issues.size() == 1);
  CHECK(*low.issues[0].term == Monomial{1, 1});
  CHECK(low.issues[0].what.find("11/30") != std::string::npos);

  auto wh = Singularity({6, 5}).validate();
  CHECK(wh.valid);
  CHECK(wh.weighted_homogeneous);

  CHECK_FALSE(Singularity({6}).validate().valid);
  CHECK_FALSE(Singularity({6, 1}).validate().valid);
  CHECK_FALSE(Singularity({6, 5}, {{{2, 4}, Rational(1)}, {{2, 4}, Rational(2)}}).validate().valid);
  CHECK_FALSE(Singularity({6, 5}, {{{2, 4}, Rational(0)}}).validate().valid);
  CHECK_FALSE(Singularity({6, 5}, {{{2, 4, 1}, Rational(1)}}).validate().valid);
  CHECK_THROWS_AS(Singularity({6, 5}, {{{1, 1}, Rational(1)}}).require_valid(), swh::Error);
}

TEST_CASE("degree identities") {
  Singularity s({5, 7, 3});
  Monomial a{1, 4, 2}, b{3, 0, 5};
  Monomial ab{4, 4, 7};
  CHECK(s.shifted_degree(a) - s.unshifted_degree(a) == s.min_exponent());
  CHECK(s.unshifted_degree(ab) == s.unshifted_degree(a) + s.unshifted_degree(b));
}
