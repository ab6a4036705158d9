#include <doctest.h>

#include <random>
#include <set>

#include "matchroot/errors.hpp"
#include "matchroot/exactpoly.hpp"

using namespace matchroot;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int degree, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(d(rng));
  if (c.back() == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

// Monic gcd over Q by the plain Euclidean algorithm with rational
// coefficients, used as an oracle for the primitive remainder sequence.
std::vector<Rational> rational_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::vector<Rational> to_rationals(const Polynomial& p) {
  std::vector<Rational> out;
  for (const Integer& c : p.coefficients()) out.emplace_back(c);
  return out;
}

}  // namespace

TEST_CASE("polynomial construction trims trailing zeros") {
  CHECK(Polynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(Polynomial{0, 0}.is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial::monomial(3, 4) == Polynomial{0, 0, 0, 0, 3});
}

TEST_CASE("ring operations") {
  const Polynomial a{-1, 0, 1};
  const Polynomial b{1, 1};
  CHECK(a + b == Polynomial{0, 1, 1});
  CHECK(a - a == Polynomial());
  CHECK(a * b == Polynomial{-1, -1, 1, 1});
  CHECK(-a == Polynomial{1, 0, -1});
  CHECK(a * Integer(3) == Polynomial{-3, 0, 3});
  CHECK(a.shifted(2) == Polynomial{0, 0, -1, 0, 1});
}

TEST_CASE("derivative") {
  CHECK(derivative(Polynomial{-1, 0, 1}) == Polynomial{0, 2});
  CHECK(derivative(Polynomial{5}) == Polynomial());
  CHECK(derivative(Polynomial{1, 0, -2, 0, 1}) == Polynomial{0, -4, 0, 4});
}

TEST_CASE("exact evaluation") {
  CHECK(eval_rational(Polynomial{-1, 0, 1}, 1) == 0);
  CHECK(eval_rational(Polynomial{-1, 0, 1}, 2) == 3);
  CHECK(eval_rational(Polynomial{0, -2, 0, 1}, Rational(3, 2)) == Rational(3, 8));
  CHECK(sign_at(Polynomial{0, -2, 0, 1}, Rational(3, 2)) == 1);
  CHECK(sign_at(Polynomial{0, -2, 0, 1}, Rational(1)) == -1);
  CHECK(sign_at(Polynomial(), Rational(7)) == 0);
}

TEST_CASE("content and primitive part") {
  CHECK(content(Polynomial{4, -6, 8}) == 2);
  CHECK(primitive_part(Polynomial{4, -6, 8}) == Polynomial{2, -3, 4});
  CHECK(primitive_part(Polynomial{-4, 0, -2}) == Polynomial{2, 0, 1});
}

TEST_CASE("exact quotient") {
  const Polynomial p{-1, 0, 1};
  CHECK(exact_quotient(p, Polynomial{-1, 1}) == Polynomial{1, 1});
  CHECK_THROWS_AS(exact_quotient(p, Polynomial{0, 0, 0, 1}), ContractError);
}

TEST_CASE("gcd examples") {
  CHECK(gcd(Polynomial{1, 0, -2, 0, 1}, Polynomial{0, -4, 0, 4}) == Polynomial{-1, 0, 1});
  CHECK(gcd(Polynomial{3, 1, 4}, Polynomial{1}) == Polynomial{1});
  CHECK(gcd(Polynomial{-2, 0, 1}, Polynomial{-2, 0, 1}) == Polynomial{-2, 0, 1});
  CHECK(gcd(Polynomial{0, 1}, Polynomial()) == Polynomial{0, 1});
}

TEST_CASE("gcd agrees with the rational Euclidean algorithm") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial common = random_poly(rng, static_cast<int>(rng() % 3), 4);
    const Polynomial a = random_poly(rng, static_cast<int>(rng() % 5), 6) * common;
    const Polynomial b = random_poly(rng, static_cast<int>(rng() % 5), 6) * common;
    const Polynomial g = gcd(a, b);
    std::vector<Rational> expect = rational_gcd(to_rationals(a), to_rationals(b));
    std::vector<Rational> got = to_rationals(g);
    const Rational lead = got.back();
    for (auto& c : got) c /= lead;
    CHECK(got == expect);
    CHECK(g.leading() > 0);
  }
}

TEST_CASE("square-free decomposition") {
  using SF = std::vector<SquarefreeFactor>;
  CHECK(squarefree_decomposition(Polynomial{1, 0, -2, 0, 1}) == SF{{Polynomial{-1, 0, 1}, 2}});
  CHECK(squarefree_decomposition(Polynomial{0, -2, 0, 1}) == SF{{Polynomial{0, -2, 0, 1}, 1}});
  CHECK(squarefree_decomposition(Polynomial{0, 1}) == SF{{Polynomial{0, 1}, 1}});

  // x^3 (x - 1)^2 (x + 2): factors multiply back and exponents are distinct.
  const Polynomial p = Polynomial{0, 0, 0, 1} * Polynomial{1, -2, 1} * Polynomial{2, 1};
  const SF d = squarefree_decomposition(p);
  Polynomial back{1};
  for (const auto& f : d) {
    for (int i = 0; i < f.exponent; ++i) back = back * f.factor;
    CHECK(is_squarefree(f.factor));
  }
  CHECK(back == p);
  CHECK(squarefree_part(p) == Polynomial{0, 1} * Polynomial{-1, 1} * Polynomial{2, 1});
}

TEST_CASE("Sturm counts") {
  CHECK(sturm_count(Polynomial{-2, 0, 1}, 0, 2) == 1);
  CHECK(sturm_count(Polynomial{-2, 0, 1}, -2, 2) == 2);
  CHECK(sturm_count(Polynomial{1, 0, 1}, -10, 10) == 0);
  CHECK_THROWS_AS(sturm_count(Polynomial{-1, 0, 1}, 1, 2), ContractError);
  CHECK_THROWS_AS(sturm_count(Polynomial{1, -2, 1}, 0, 2), ContractError);
}

TEST_CASE("root isolation") {
  const auto r2 = isolate_real_roots(Polynomial{-2, 0, 1});
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].lo >= -2);
  CHECK(r2[0].hi <= 0);
  CHECK(r2[1].lo >= 0);
  CHECK(r2[1].hi <= 2);
  for (const auto& iv : r2) CHECK(sign_at(Polynomial{-2, 0, 1}, iv.lo) * sign_at(Polynomial{-2, 0, 1}, iv.hi) < 0);

  const auto r1 = isolate_real_roots(Polynomial{-1, 0, 1});
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].is_point());
  CHECK(r1[0].lo == -1);
  CHECK(r1[1].lo == 1);

  CHECK(isolate_real_roots(Polynomial{1, 0, 1}).empty());
}

TEST_CASE("isolating intervals never end on another root") {
  // x (x^2 - 1)(x^2 - 2)(4x^2 - 1): rational roots sit on bisection points.
  const Polynomial p = Polynomial{0, 1} * Polynomial{-1, 0, 1} * Polynomial{-2, 0, 1} * Polynomial{-1, 0, 4};
  const auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 7);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0) CHECK(roots[i - 1].hi <= roots[i].lo);
    if (roots[i].is_point()) {
      CHECK(sign_at(p, roots[i].lo) == 0);
    } else {
      CHECK(sign_at(p, roots[i].lo) != 0);
      CHECK(sign_at(p, roots[i].hi) != 0);
      CHECK(sturm_count(squarefree_part(p), roots[i].lo, roots[i].hi) == 1);
    }
  }
}

TEST_CASE("isolation counts match a dense sign scan on random products of linear factors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p{1};
    std::set<Rational> roots;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      const long num = static_cast<long>(rng() % 21) - 10;
      const long den = 1 + static_cast<long>(rng() % 3);
      p = p * Polynomial{-num, den};
      roots.insert(make_rational(num, den));
    }
    const auto iv = isolate_real_roots(p);
    CHECK(iv.size() == roots.size());
  }
}
