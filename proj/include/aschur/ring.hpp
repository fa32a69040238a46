#pragma once

// Exact Laurent polynomials in v over the rationals, plus quantum integers,
// quantum factorials and balanced Gaussian binomials.
//
// q is not a separate variable: it is always v^2.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace aschur {

using Rational = mpq_class;

class LaurentPoly {
 public:
  using TermMap = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly q() { return monomial(2); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const TermMap& terms() const { return terms_; }
  Rational coeff(int exponent) const;

  // Only valid on nonzero polynomials.
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, long c) { return a *= Rational(c); }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  // Arbitrary but total order, so polynomials can sit in ordered containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  // Multiply by v^k.
  LaurentPoly shifted(int k) const;
  // The bar involution v -> v^{-1}.
  LaurentPoly bar() const;

  // Quotient if `divisor` divides *this exactly in Q[v, v^-1], nullopt otherwise.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  // Render as "v^2 + 2 + v^-2". With q_mode, exponents are halved and printed
  // in q; callers must check has_even_support() first.
  std::string to_string(bool q_mode = false) const;
  bool has_even_support() const;

 private:
  void add_term(int exponent, const Rational& c);
  TermMap terms_;
};

// Evaluation homomorphism v -> value. Throws std::invalid_argument on value == 0.
Rational specialize(const LaurentPoly& p, const Rational& value);

// [m] = (v^m - v^-m)/(v - v^-1). Defined for every integer m; [-m] = -[m].
LaurentPoly quantum_int(int m);
// [m]! = [1][2]...[m]; [0]! = 1. Requires m >= 0.
LaurentPoly quantum_factorial(int m);
// Balanced Gaussian binomial [m choose t] for t >= 0 and any integer m.
LaurentPoly gauss_binomial(int m, int t);

}  // namespace aschur
