#include <doctest.h>

#include "matchroot/algebraic.hpp"
#include "matchroot/errors.hpp"

using namespace matchroot;

TEST_CASE("rational embeddings") {
  const auto zero = AlgebraicNumber::from_rational(0);
  CHECK(zero.is_rational());
  CHECK(zero.is_zero());
  CHECK(zero.defpoly() == Polynomial{0, 1});

  CHECK(AlgebraicNumber::from_rational(1).defpoly() == Polynomial{-1, 1});
  const auto three_halves = AlgebraicNumber::from_rational(Rational(3, 2));
  CHECK(three_halves.defpoly() == Polynomial{-3, 2});
  CHECK(three_halves.value() == Rational(3, 2));
}

TEST_CASE("interval construction") {
  const auto sqrt2 = AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, 1, 2);
  CHECK_FALSE(sqrt2.is_rational());
  CHECK_THROWS_AS(AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, -2, 2), ContractError);
  CHECK_THROWS_AS(AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, 2, 3), ContractError);
  CHECK_THROWS_AS(AlgebraicNumber::from_interval(Polynomial{-1, 0, 1}, 1, 2), ContractError);
  CHECK_THROWS_AS(AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, 2, 1), ContractError);

  // A root that happens to be rational collapses to a point.
  const auto one = AlgebraicNumber::from_interval(Polynomial{-1, 0, 1}, 0, 2);
  CHECK(one.is_rational());
  CHECK(one.value() == 1);
}

TEST_CASE("negation") {
  const auto sqrt2 = AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, 1, 2);
  const auto neg = sqrt2.negate();
  CHECK(neg.defpoly() == Polynomial{-2, 0, 1});
  CHECK(neg.lo() == -2);
  CHECK(neg.hi() == -1);
  CHECK(AlgebraicNumber::from_rational(1).negate() == AlgebraicNumber::from_rational(-1));
  CHECK(AlgebraicNumber::from_rational(0).negate() == AlgebraicNumber::from_rational(0));

  // Odd defining polynomial: x^3 - x - 1 reflects to x^3 - x + 1.
  const auto r = AlgebraicNumber::from_interval(Polynomial{-1, -1, 0, 1}, 1, 2);
  CHECK(vanishes_at(r.negate(), Polynomial{1, -1, 0, 1}));
}

TEST_CASE("equality") {
  const auto sqrt2 = AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, 1, 2);
  CHECK(AlgebraicNumber::from_rational(1) == AlgebraicNumber::from_interval(Polynomial{-1, 0, 1}, 0, 2));
  CHECK_FALSE(sqrt2 == sqrt2.negate());
  CHECK(sqrt2 == AlgebraicNumber::from_interval(Polynomial{-4, 0, 0, 0, 1}, 1, 2));
  CHECK(sqrt2 == AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, Rational(7, 5), Rational(3, 2)));
  CHECK_FALSE(sqrt2 == AlgebraicNumber::from_interval(Polynomial{-3, 0, 1}, 1, 2));
}

TEST_CASE("ordering") {
  const auto sqrt2 = AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, 1, 2);
  const auto sqrt3 = AlgebraicNumber::from_interval(Polynomial{-3, 0, 1}, 1, 2);
  CHECK(sqrt2 < sqrt3);
  CHECK(AlgebraicNumber::from_rational(Rational(141, 100)) < sqrt2);
  CHECK(sqrt2 < AlgebraicNumber::from_rational(Rational(142, 100)));
  CHECK(sqrt2.negate() < AlgebraicNumber::from_rational(0));
}

TEST_CASE("refinement halves the interval around the root") {
  const auto sqrt2 = AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, 1, 2);
  const auto once = sqrt2.refine();
  CHECK(once.lo() == 1);
  CHECK(once.hi() == Rational(3, 2));
  auto t = sqrt2;
  for (int k = 0; k < 10; ++k) t = t.refine();
  CHECK(t.hi() - t.lo() == Rational(1, 1024));
  CHECK(t == sqrt2);
  const auto point = AlgebraicNumber::from_rational(5);
  CHECK(point.refine().value() == 5);
}

TEST_CASE("root multiplicity") {
  CHECK(root_multiplicity(AlgebraicNumber::from_rational(1), Polynomial{1, 0, -2, 0, 1}) == 2);
  const auto sqrt2 = AlgebraicNumber::from_interval(Polynomial{-2, 0, 1}, 1, 2);
  CHECK(root_multiplicity(sqrt2, Polynomial{0, -2, 0, 1}) == 1);
  CHECK(root_multiplicity(AlgebraicNumber::from_rational(0), Polynomial{-1, 0, 1}) == 0);
  // (x^2 - 2)^3 x^2
  Polynomial p = Polynomial{0, 0, 1};
  for (int i = 0; i < 3; ++i) p = p * Polynomial{-2, 0, 1};
  CHECK(root_multiplicity(sqrt2, p) == 3);
  CHECK(root_multiplicity(sqrt2.negate(), p) == 3);
  CHECK(root_multiplicity(AlgebraicNumber::from_rational(0), p) == 2);
  CHECK(root_multiplicity(sqrt2, squarefree_decomposition(p)) == 3);
  CHECK(vanishes_at(sqrt2, p));
  CHECK_FALSE(vanishes_at(sqrt2, Polynomial{-3, 0, 1}));
}

TEST_CASE("real roots are sorted and distinct") {
  Polynomial p = Polynomial{0, -2, 0, 1} * Polynomial{0, -2, 0, 1} * Polynomial{-1, 1};
  const auto roots = real_roots(p);
  REQUIRE(roots.size() == 4);
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1] < roots[i]);
  CHECK(roots[1] == AlgebraicNumber::from_rational(0));
  CHECK(roots[2] == AlgebraicNumber::from_rational(1));
  CHECK(real_roots(Polynomial{1, 0, 1}).empty());
}
