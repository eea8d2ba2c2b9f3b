#include <doctest.h>

#include "swh/engine.hpp"
#include "swh/errors.hpp"
#include "swh/shifts.hpp"

using swh::GMElement;
using swh::GMTerm;
using swh::Monomial;
using swh::Rational;
using swh::Singularity;

TEST_CASE("basis classes are already normal") {
  swh::GaussManinEngine eng(Singularity({6, 5}), Rational(5));
  auto r = eng.reduce_monomial({3, 2});
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0] == GMTerm{{3, 2}, 0, Rational(1)});
}

TEST_CASE("reduction of divisible monomials in the unperturbed case") {
  swh::GaussManinEngine eng(Singularity({6, 5}), Rational(5));
  // x^5 g with g free of x: coefficient (0)/6, so the class vanishes
  CHECK(eng.reduce_monomial({5, 2}).terms.empty());
  CHECK(eng.reduce_monomial({1, 4}).terms.empty());
  // x^7 = (1/6) * 2 * dt^{-1}[x dx] ... the rule lowers k by one
  auto r = eng.reduce_monomial({7, 0});
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0] == GMTerm{{1, 0}, -1, Rational(1, 3)});
}

TEST_CASE("reduction uses the base coefficients") {
  swh::GaussManinEngine eng(Singularity({7, 5}, {}, {Rational(1, 7), Rational(1, 5)}), Rational(5));
  auto r = eng.reduce_monomial({8, 0});
  REQUIRE(r.terms.size() == 1);
  // 1/(c e) = 1, factor mu_i - e_i + 1 = 2
  CHECK(r.terms[0] == GMTerm{{1, 0}, -1, Rational(2)});
}

TEST_CASE("weighted homogeneous expansion is a single component") {
  auto rep = swh::expand(Singularity({6, 5}), {2, 1}, Rational(3));
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].alpha == Rational(3, 6) + Rational(2, 5));
  CHECK(*rep.measured_shift == Rational(0));
}

TEST_CASE("expansion components against the independent oracle") {
  Singularity f({7, 5}, {{{3, 3}, Rational(1)}, {{5, 2}, Rational(1)}}, {Rational(1, 7), Rational(1, 5)});
  auto rep = swh::expand(f, {0, 0}, Rational(16, 35));
  REQUIRE(rep.components.size() == 3);
  CHECK(rep.components[0].alpha == Rational(12, 35));
  CHECK(rep.components[0].terms == std::vector<GMTerm>{{{0, 0}, 0, Rational(1)}});
  CHECK(rep.components[1].alpha == Rational(13, 35));
  CHECK(rep.components[1].terms == std::vector<GMTerm>{{{3, 3}, 1, Rational(-1)}});
  CHECK(rep.components[2].alpha == Rational(16, 35));
  CHECK(rep.components[2].terms == std::vector<GMTerm>{{{5, 2}, 1, Rational(5)}});

  Singularity g({7, 6}, {{{5, 2}, Rational(1)}});
  auto rg = swh::expand(g, {0, 0}, Rational(17, 42));
  REQUIRE(rg.components.size() == 3);
  CHECK(rg.components[1].alpha == Rational(5, 14));
  CHECK(rg.components[1].terms == std::vector<GMTerm>{{{5, 2}, 1, Rational(-1)}});
  CHECK(rg.components[2].terms == std::vector<GMTerm>{{{3, 4}, 1, Rational(2, 7)}});
}

TEST_CASE("cancelling coefficient at c = 6") {
  Singularity base({7, 5}, {{{3, 3}, Rational(1)}}, {Rational(1, 7), Rational(1, 5)});
  auto res = swh::find_cancelling_coefficient(base, {5, 2}, {0, 0}, Rational(16, 35));
  REQUIRE(res.c.has_value());
  CHECK(*res.c == Rational(6));
  CHECK(res.degree_bound == 1);
  Singularity at6 = base.with_perturbation({{{3, 3}, Rational(1)}, {{5, 2}, Rational(6)}});
  CHECK(swh::component_at(at6, {0, 0}, Rational(16, 35)).empty());
}

TEST_CASE("cancelling coefficients for x^7+y^6+x^5y^2") {
  Singularity base({7, 6}, {{{5, 2}, Rational(1)}});
  auto r1 = swh::find_cancelling_coefficient(base, {3, 4}, {0, 0}, Rational(17, 42));
  REQUIRE(r1.c.has_value());
  CHECK(*r1.c == Rational(2, 7));
  auto r2 = swh::find_cancelling_coefficient(base, {3, 4}, {1, 0}, Rational(23, 42));
  REQUIRE(r2.c.has_value());
  CHECK(*r2.c == Rational(5, 14));
  Singularity with_c = base.with_perturbation({{{5, 2}, Rational(1)}, {{3, 4}, Rational(5, 14)}});
  auto r3 = swh::find_cancelling_coefficient(with_c, {4, 4}, {0, 0}, Rational(23, 42));
  REQUIRE(r3.c.has_value());
  CHECK(*r3.c == Rational(-5, 16464));
}

TEST_CASE("no dependence reports none") {
  auto res = swh::find_cancelling_coefficient(Singularity({6, 5}), {5, 4}, {0, 0}, Rational(11, 30));
  CHECK_FALSE(res.c.has_value());
  auto below = swh::find_cancelling_coefficient(Singularity({6, 5}), {5, 4}, {1, 1}, Rational(11, 30));
  CHECK_FALSE(below.c.has_value());
}

TEST_CASE("second order dependence is refused") {
  // target two steps of d(m) - 1 above alpha~(h): quadratic terms in c may appear
  Singularity base({5, 4}, {});
  Monomial m{3, 2};  // d = 3/5 + 1/2 = 11/10
  bool threw = false;
  try {
    auto res = swh::find_cancelling_coefficient(base, m, {0, 0}, Rational(9, 20) + Rational(2, 10));
    CHECK(res.degree_bound == 2);
  } catch (const swh::Error& e) {
    threw = true;
    CHECK(e.kind() == swh::ErrorKind::Nonlinear);
  }
  CHECK(threw);
}

TEST_CASE("engine shifts") {
  CHECK(swh::expansion_shift(Singularity({6, 5}, {{{2, 4}, Rational(1)}}), {4, 3}) == 1);
  CHECK(swh::expansion_shift(Singularity({6, 5}, {{{2, 4}, Rational(1)}}), {0, 0}) == 0);
  auto t = swh::engine_shift_table(Singularity({6, 5}));
  for (const auto& en : t.entries) CHECK(en.r == 0);
  auto t34 = swh::engine_shift_table(Singularity({6, 5}, {{{4, 3}, Rational(10)}, {{2, 4}, Rational(5)}}));
  for (const auto& en : t34.entries) CHECK(en.r == 0);
}

TEST_CASE("engine root exponents") {
  auto comb = swh::reduced_bs_roots({6, 5}, Monomial{2, 4});
  auto eng = swh::engine_bs_roots(Singularity({6, 5}, {{{2, 4}, Rational(1)}}));
  CHECK(comb.exponents == eng.exponents);

  Singularity base({7, 5}, {}, {Rational(1, 7), Rational(1, 5)});
  auto generic = swh::engine_bs_roots(base.with_perturbation({{{3, 3}, Rational(1)}, {{5, 2}, Rational(1)}}));
  CHECK(generic.exponents.count(Rational(16, 35)) == 1);
  CHECK(generic.exponents.count(Rational(51, 35)) == 0);
  auto special = swh::engine_bs_roots(base.with_perturbation({{{3, 3}, Rational(1)}, {{5, 2}, Rational(6)}}));
  CHECK(special.exponents.count(Rational(16, 35)) == 0);
  CHECK(special.exponents.count(Rational(51, 35)) == 1);

  Singularity st({7, 6}, {{{5, 2}, Rational(1)}, {{3, 4}, Rational(5, 14)}, {{4, 4}, Rational(-5, 16464)}});
  CHECK(swh::engine_bs_roots(st).exponents.count(Rational(65, 42)) == 1);
  Singularity st0({7, 6}, {{{5, 2}, Rational(1)}, {{3, 4}, Rational(5, 14)}});
  CHECK(swh::engine_bs_roots(st0).exponents.count(Rational(65, 42)) == 0);
}

TEST_CASE("cutoff errors") {
  CHECK_THROWS_AS(swh::expand(Singularity({6, 5}), {1, 1}, Rational(1, 2)), swh::Error);
  try {
    swh::expand(Singularity({6, 5}, {{{2, 4}, Rational(1)}}), {5, 4}, Rational(19, 10));
    FAIL("expected cutoff exhaustion");
  } catch (const swh::Error& e) {
    CHECK(e.kind() == swh::ErrorKind::CutoffExhausted);
  }
}

TEST_CASE("reduce on a general element") {
  swh::GaussManinEngine eng(Singularity({6, 5}, {{{2, 4}, Rational(1)}}), Rational(3));
  GMElement x{{GMTerm{{1, 1}, 0, Rational(2)}, GMTerm{{1, 1}, 0, Rational(-2)}}};
  CHECK(eng.reduce(x).terms.empty());
  GMElement y{{GMTerm{{0, 0}, 0, Rational(3)}, GMTerm{{0, 1}, 1, Rational(1, 2)}}};
  auto r = eng.reduce(y);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].nu == Monomial{0, 1});  // degree 1/6 + 2/5 - 1 sorts first
  CHECK(r.terms[1].coeff == Rational(3));
}
