#include "matchroot/algebraic.hpp"

#include <algorithm>

#include "matchroot/errors.hpp"

namespace matchroot {

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
  return AlgebraicNumber(Polynomial({-q.get_num(), q.get_den()}), q, q, true);
}

AlgebraicNumber AlgebraicNumber::from_interval(const Polynomial& poly, const Rational& lo,
                                               const Rational& hi) {
  if (poly.is_zero()) throw ContractError("algebraic number: zero defining polynomial");
  if (!(lo < hi)) throw ContractError("algebraic number: interval needs lo < hi");
  Polynomial p = squarefree_part(poly);
  if (p.degree() < 1) throw ContractError("algebraic number: constant defining polynomial");
  if (sign_at(p, lo) == 0 || sign_at(p, hi) == 0) {
    throw ContractError("algebraic number: interval endpoint is a root");
  }
  if (sturm_count(p, lo, hi) != 1) {
    throw ContractError("algebraic number: interval does not isolate exactly one root");
  }
  return canonical(std::move(p), lo, hi);
}

AlgebraicNumber AlgebraicNumber::canonical(Polynomial defpoly, Rational lo, Rational hi) {
  if (defpoly.degree() == 1) {
    return from_rational(make_rational(-defpoly.coeff(0), defpoly.coeff(1)));
  }
  if (auto q = rational_root_between(defpoly, lo, hi)) return from_rational(*q);
  return AlgebraicNumber(std::move(defpoly), std::move(lo), std::move(hi), false);
}

AlgebraicNumber AlgebraicNumber::negate() const {
  if (point_) return from_rational(-lo_);
  return AlgebraicNumber(primitive_part(reflect(defpoly_)), -hi_, -lo_, false);
}

AlgebraicNumber AlgebraicNumber::refine() const {
  if (point_) return *this;
  Rational mid = (lo_ + hi_) / 2;
  const int s = sign_at(defpoly_, mid);
  if (s == 0) return from_rational(mid);
  if (s == sign_at(defpoly_, lo_)) return AlgebraicNumber(defpoly_, mid, hi_, false);
  return AlgebraicNumber(defpoly_, lo_, mid, false);
}

bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.point_ && b.point_) return a.lo_ == b.lo_;
  if (a.point_) return b.lo_ < a.lo_ && a.lo_ < b.hi_ && sign_at(b.defpoly_, a.lo_) == 0;
  if (b.point_) return equals(b, a);
  const Rational& lo = std::max(a.lo_, b.lo_);
  const Rational& hi = std::min(a.hi_, b.hi_);
  if (!(lo < hi)) return false;
  const Polynomial g = gcd(a.defpoly_, b.defpoly_);
  if (g.degree() < 1) return false;
  // g divides a.defpoly, so it has at most one (simple) root in the
  // intersection, and no root at either end of it.
  return sign_at(g, lo) != sign_at(g, hi);
}

std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (equals(a, b)) return std::strong_ordering::equal;
  AlgebraicNumber x = a;
  AlgebraicNumber y = b;
  for (;;) {
    if (x.hi_ <= y.lo_) return std::strong_ordering::less;
    if (x.lo_ >= y.hi_) return std::strong_ordering::greater;
    x = x.refine();
    y = y.refine();
  }
}

std::string AlgebraicNumber::to_string() const {
  if (point_) return lo_.get_str();
  return "root of " + defpoly_.to_string() + " in (" + lo_.get_str() + ", " + hi_.get_str() + ")";
}

bool vanishes_at(const AlgebraicNumber& t, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (t.is_rational()) return sign_at(f, t.value()) == 0;
  const Polynomial g = gcd(f, t.defpoly());
  if (g.degree() < 1) return false;
  return sign_at(g, t.lo()) != sign_at(g, t.hi());
}

int root_multiplicity(const AlgebraicNumber& t, std::span<const SquarefreeFactor> factors) {
  // The factors are pairwise coprime, so at most one of them vanishes at t.
  for (const auto& [factor, exponent] : factors) {
    if (vanishes_at(t, factor)) return exponent;
  }
  return 0;
}

int root_multiplicity(const AlgebraicNumber& t, const Polynomial& f) {
  if (f.is_zero()) throw ContractError("root_multiplicity of the zero polynomial");
  const auto factors = squarefree_decomposition(f);
  return root_multiplicity(t, factors);
}

std::vector<AlgebraicNumber> real_roots(const Polynomial& f) {
  std::vector<AlgebraicNumber> roots;
  for (const auto& sf : squarefree_decomposition(f)) {
    for (const auto& iv : isolate_real_roots(sf.factor)) {
      if (iv.is_point()) {
        roots.push_back(AlgebraicNumber::from_rational(iv.lo));
      } else {
        roots.push_back(AlgebraicNumber::from_interval(sf.factor, iv.lo, iv.hi));
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
  return roots;
}

}  // namespace matchroot
