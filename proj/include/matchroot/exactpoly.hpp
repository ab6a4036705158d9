#pragma once

// Dense univariate polynomials over arbitrary-precision integers.
//
// Coefficient i is the coefficient of x^i. The zero polynomial has no
// coefficients and degree -1. Rational arithmetic appears only at the
// evaluation boundary (Horner over Q, Sturm sign evaluation).

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace matchroot {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Integer& c);
  static Polynomial monomial(const Integer& c, int power);
  static Polynomial variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero past the degree.
  const Integer& coeff(int i) const;
  const Integer& leading() const { return coeffs_.back(); }
  std::span<const Integer> coefficients() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Multiplies by x^k.
  Polynomial shifted(int k) const;

  /// Coefficient list low-to-high, e.g. "[-1, 0, 1]" for x^2 - 1.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

Polynomial derivative(const Polynomial& p);

/// p(-x).
Polynomial reflect(const Polynomial& p);

/// Exact Horner evaluation.
Rational eval_rational(const Polynomial& p, const Rational& q);

/// Sign of p(q) in {-1, 0, 1}, computed without leaving the integers.
int sign_at(const Polynomial& p, const Rational& q);

/// gcd of the coefficients, nonnegative.
Integer content(const Polynomial& p);

/// p divided by its content, with positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

/// A positive integer multiple of the remainder of a modulo b. Positivity of
/// the multiplier keeps Sturm chains valid.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// a / b when the division is exact over the integers. Throws ContractError
/// otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
Polynomial gcd(const Polynomial& p, const Polynomial& q);

struct SquarefreeFactor {
  Polynomial factor;
  int exponent = 0;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. p = unit * prod factor_i^exponent_i with pairwise coprime,
/// square-free, primitive factors and strictly increasing exponents. Constant
/// factors are omitted, so a constant p yields an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

/// Primitive square-free part of a nonzero p.
Polynomial squarefree_part(const Polynomial& p);

bool is_squarefree(const Polynomial& p);

/// Sturm chain p, p', -rem, ... with every member scaled to be primitive.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Sign variations of the chain at q, zeros skipped.
int sign_variations(std::span<const Polynomial> chain, const Rational& q);

/// Number of distinct real roots of square-free p in the open interval
/// (lo, hi). Endpoints must not be roots.
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// max(1, sum |c_i| / |lead|) over the non-leading coefficients; every real
/// root r has |r| <= B.
Rational cauchy_bound(const Polynomial& p);

struct RootInterval {
  Rational lo;
  Rational hi;
  bool is_point() const { return lo == hi; }
};

/// The rational root of p inside the open interval (lo, hi), assuming p has
/// exactly one real root there and none at the endpoints.
std::optional<Rational> rational_root_between(const Polynomial& p, Rational lo, Rational hi);

/// Disjoint isolating intervals for the distinct real roots of p, ordered
/// increasingly. Rational roots come back as points.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

}  // namespace matchroot
