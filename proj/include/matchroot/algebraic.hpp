#pragma once

#include <compare>
#include <span>
#include <string>

#include "matchroot/exactpoly.hpp"

namespace matchroot {

/// An exact real algebraic number.
///
/// Held as a square-free, primitive defining polynomial with positive leading
/// coefficient, plus either an exact rational point or an open rational
/// interval (lo, hi) containing exactly one root of that polynomial. Rational
/// values are always kept in point form with a linear defining polynomial.
class AlgebraicNumber {
 public:
  static AlgebraicNumber from_rational(const Rational& q);

  /// The root of `poly` isolated by (lo, hi). `poly` is made square-free and
  /// primitive first. Throws ContractError unless lo < hi, neither endpoint
  /// is a root, and the interval holds exactly one root.
  static AlgebraicNumber from_interval(const Polynomial& poly, const Rational& lo,
                                       const Rational& hi);

  const Polynomial& defpoly() const { return defpoly_; }
  bool is_rational() const { return point_; }
  /// Exact value; only meaningful when is_rational().
  const Rational& value() const { return lo_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  AlgebraicNumber negate() const;

  /// Halves the isolating interval. Point form is returned unchanged.
  AlgebraicNumber refine() const;

  bool is_zero() const { return point_ && lo_ == 0; }

  /// True iff both denote the same real number.
  friend bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return equals(a, b);
  }
  friend std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b);
  }

  /// Human readable: "3/2" or "root of [-2, 0, 1] in (1, 3/2)".
  std::string to_string() const;

 private:
  AlgebraicNumber(Polynomial defpoly, Rational lo, Rational hi, bool point)
      : defpoly_(std::move(defpoly)), lo_(std::move(lo)), hi_(std::move(hi)), point_(point) {}

  // Moves a trusted (square-free, single-root) interval into point form when
  // the root is rational.
  static AlgebraicNumber canonical(Polynomial defpoly, Rational lo, Rational hi);

  Polynomial defpoly_;
  Rational lo_;
  Rational hi_;
  bool point_ = true;
};

/// True iff t is a root of f. f may be any nonzero polynomial.
bool vanishes_at(const AlgebraicNumber& t, const Polynomial& f);

/// Exponent k with (x - t)^k | f and (x - t)^(k+1) not dividing f.
int root_multiplicity(const AlgebraicNumber& t, const Polynomial& f);

/// Same, reading the square-free decomposition of f directly.
int root_multiplicity(const AlgebraicNumber& t, std::span<const SquarefreeFactor> factors);

/// All distinct real roots of f, ascending.
std::vector<AlgebraicNumber> real_roots(const Polynomial& f);

}  // namespace matchroot
