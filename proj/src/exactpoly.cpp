#include "matchroot/exactpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "matchroot/errors.hpp"

namespace matchroot {

namespace {

const Integer kZero = 0;

// sum c_i a^i b^(d-i) for q = a/b, b > 0. Same sign as p(q).
Integer homogeneous_value(const Polynomial& p, const Rational& q) {
  const Integer& a = q.get_num();
  const Integer& b = q.get_den();
  const int d = p.degree();
  Integer v = p.coeff(d);
  if (b == 1) {
    for (int i = d - 1; i >= 0; --i) {
      v *= a;
      v += p.coeff(i);
    }
    return v;
  }
  Integer bpow = 1;
  for (int i = d - 1; i >= 0; --i) {
    bpow *= b;
    v *= a;
    mpz_addmul(v.get_mpz_t(), p.coeff(i).get_mpz_t(), bpow.get_mpz_t());
  }
  return v;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ContractError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, int power) {
  std::vector<Integer> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

const Integer& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(coeffs_.size() + static_cast<std::size_t>(k));
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].get_str();
  }
  os << ']';
  return os.str();
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> v(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = p.coeff(i) * i;
  return Polynomial(std::move(v));
}

Polynomial reflect(const Polynomial& p) {
  std::vector<Integer> v(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Polynomial(std::move(v));
}

Rational eval_rational(const Polynomial& p, const Rational& q) {
  if (p.is_zero()) return 0;
  const Integer& b = q.get_den();
  Integer bd;
  mpz_pow_ui(bd.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p.degree()));
  return make_rational(homogeneous_value(p, q), bd);
}

int sign_at(const Polynomial& p, const Rational& q) {
  if (p.is_zero()) return 0;
  return sgn(homogeneous_value(p, q));
}

Integer content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.leading() < 0) c = -c;
  if (c == 1) return p;
  std::vector<Integer> v(p.coefficients().begin(), p.coefficients().end());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return Polynomial(std::move(v));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ContractError("pseudo_remainder by zero polynomial");
  const int db = b.degree();
  Integer lb = b.leading();
  const int s = sgn(lb);
  if (s < 0) lb = -lb;
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  int dr = a.degree();
  while (dr >= db && dr >= 0) {
    Integer lr = r[static_cast<std::size_t>(dr)];
    if (s < 0) lr = -lr;
    const int shift = dr - db;
    for (int i = 0; i <= dr; ++i) r[static_cast<std::size_t>(i)] *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(j + shift)].get_mpz_t(), lr.get_mpz_t(),
                 b.coeff(j).get_mpz_t());
    }
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  r.resize(static_cast<std::size_t>(dr + 1));
  return Polynomial(std::move(r));
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ContractError("division by zero polynomial");
  if (a.is_zero()) return {};
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) throw ContractError("exact_quotient: division is not exact");
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw ContractError("exact_quotient: division is not exact");
    }
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(j + k)].get_mpz_t(), t.get_mpz_t(),
                 b.coeff(j).get_mpz_t());
    }
    q[static_cast<std::size_t>(k)] = std::move(t);
  }
  for (int i = 0; i < db; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) {
      throw ContractError("exact_quotient: division is not exact");
    }
  }
  return Polynomial(std::move(q));
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw ContractError("gcd of two zero polynomials");
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  Polynomial a = primitive_part(p);
  Polynomial b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Polynomial::constant(1);
    Polynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw ContractError("square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const Polynomial f = primitive_part(p);
  const Polynomial df = derivative(f);
  const Polynomial a0 = gcd(f, df);
  Polynomial b = exact_quotient(f, a0);
  Polynomial c = exact_quotient(df, a0);
  Polynomial d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw ContractError("square-free part of the zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(1);
  const Polynomial f = primitive_part(p);
  return primitive_part(exact_quotient(f, gcd(f, derivative(f))));
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 0) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Polynomial next = derivative(p);
  while (!next.is_zero()) {
    // Scale by the positive content only; the sign of each member matters.
    Integer c = content(next);
    if (c != 1) {
      std::vector<Integer> v(next.coefficients().begin(), next.coefficients().end());
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      next = Polynomial(std::move(v));
    }
    chain.push_back(next);
    const std::size_t k = chain.size();
    next = -pseudo_remainder(chain[k - 2], chain[k - 1]);
  }
  return chain;
}

int sign_variations(std::span<const Polynomial> chain, const Rational& q) {
  int count = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = sign_at(s, q);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw ContractError("sturm_count: need lo < hi");
  if (!is_squarefree(p)) throw ContractError("sturm_count: polynomial is not square-free");
  if (p.degree() <= 0) return 0;
  if (sign_at(p, lo) == 0 || sign_at(p, hi) == 0) {
    throw ContractError("sturm_count: interval endpoint is a root");
  }
  const auto chain = sturm_sequence(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.degree() < 1) return 1;
  Integer sum = 0;
  for (int i = 0; i < p.degree(); ++i) sum += abs(p.coeff(i));
  const Rational b = make_rational(sum, abs(p.leading()));
  return b > 1 ? b : Rational(1);
}

std::optional<Rational> rational_root_between(const Polynomial& p, Rational lo, Rational hi) {
  // A rational root of p is k/|lead| for an integer k. Once the window is
  // narrower than 1/|lead| it holds at most one such candidate.
  const Integer lead = abs(p.leading());
  const int sign_lo = sign_at(p, lo);
  while ((hi - lo) * lead >= 1) {
    Rational mid = (lo + hi) / 2;
    const int s = sign_at(p, mid);
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Rational scaled = lo * lead;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  k += 1;
  Rational candidate = make_rational(k, lead);
  if (candidate < hi && sign_at(p, candidate) == 0) return candidate;
  return std::nullopt;
}

namespace {

struct Isolator {
  std::vector<RootInterval>& out;

  void run(const Polynomial& p, const std::vector<Polynomial>& chain, const Rational& lo,
           const Rational& hi, int var_lo, int var_hi) {
    const int count = var_lo - var_hi;
    if (count <= 0) return;
    if (count == 1) {
      if (auto q = rational_root_between(p, lo, hi)) {
        out.push_back({*q, *q});
      } else {
        out.push_back({lo, hi});
      }
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (sign_at(p, mid) != 0) {
      const int var_mid = sign_variations(chain, mid);
      run(p, chain, lo, mid, var_lo, var_mid);
      run(p, chain, mid, hi, var_mid, var_hi);
      return;
    }
    // Exact rational root: report it as a point and step off it far enough
    // that (mid - d, mid + d) holds no other root, so no interval endpoint
    // is ever a root.
    Rational d = (hi - lo) / 4;
    for (;;) {
      const Rational a = mid - d;
      const Rational b = mid + d;
      if (sign_at(p, a) != 0 && sign_at(p, b) != 0 &&
          sign_variations(chain, a) - sign_variations(chain, b) == 1) {
        run(p, chain, lo, a, var_lo, sign_variations(chain, a));
        out.push_back({mid, mid});
        run(p, chain, b, hi, sign_variations(chain, b), var_hi);
        return;
      }
      d /= 2;
    }
  }
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw ContractError("isolate_real_roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const Polynomial f = squarefree_part(p);
  Rational bound = cauchy_bound(f);
  while (sign_at(f, bound) == 0 || sign_at(f, -bound) == 0) bound += 1;
  const auto chain = sturm_sequence(f);
  Isolator iso{out};
  iso.run(f, chain, -bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound));
  return out;
}

}  // namespace matchroot
