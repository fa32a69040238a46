#include "aschur/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace aschur {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Rational(constant));
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, x] : out.terms_) x = -x;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly();
  // Long division from the top degree down; the divisor's leading term is
  // cancelled at each step.
  const int dlead = divisor.max_degree();
  const int dlow = divisor.min_degree();
  const Rational& dc = divisor.terms_.rbegin()->second;
  LaurentPoly rem = *this;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    int e = rem.max_degree();
    // If the remainder's span is already narrower than the divisor's, no
    // exact quotient exists.
    if (e - rem.min_degree() < dlead - dlow) return std::nullopt;
    Rational c = rem.terms_.rbegin()->second / dc;
    LaurentPoly step = monomial(e - dlead, c);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

bool LaurentPoly::has_even_support() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

namespace {

std::string power(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_string(bool q_mode) const {
  if (terms_.empty()) return "0";
  if (q_mode && !has_even_support())
    throw std::logic_error("q-mode rendering needs even exponents");
  const char* var = q_mode ? "q" : "v";
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int e = q_mode ? it->first / 2 : it->first;
    Rational c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << power(var, e);
    }
  }
  return os.str();
}

Rational specialize(const LaurentPoly& p, const Rational& value) {
  if (value == 0) throw std::invalid_argument("specialize: evaluation point must be nonzero");
  Rational out = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational x = 1;
    Rational base = e >= 0 ? value : Rational(1) / value;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) x *= base;
    out += c * x;
  }
  return out;
}

LaurentPoly quantum_int(int m) {
  if (m < 0) return -quantum_int(-m);
  LaurentPoly out;
  for (int k = 0; k < m; ++k) out += LaurentPoly::monomial(m - 1 - 2 * k);
  return out;
}

LaurentPoly quantum_factorial(int m) {
  if (m < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly out(1);
  for (int k = 2; k <= m; ++k) out *= quantum_int(k);
  return out;
}

LaurentPoly gauss_binomial(int m, int t) {
  if (t < 0) throw std::invalid_argument("gauss_binomial: negative lower index");
  if (t == 0) return LaurentPoly(1);
  if (m < 0) {
    // [m choose t] = (-1)^t [t - m - 1 choose t]
    LaurentPoly p = gauss_binomial(t - m - 1, t);
    return t % 2 ? -p : p;
  }
  if (m < t) return LaurentPoly();
  LaurentPoly num(1), den(1);
  for (int k = 0; k < t; ++k) {
    num *= quantum_int(m - k);
    den *= quantum_int(k + 1);
  }
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("gauss_binomial: inexact division");
  return *q;
}

}  // namespace aschur
