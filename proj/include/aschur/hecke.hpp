#pragma once

// The extended affine Hecke algebra on the basis {T_w}, with q = v^2 and
// quadratic relation T_s^2 = (q - 1) T_s + q.

#include <map>
#include <string>
#include <vector>

#include "aschur/aweyl.hpp"
#include "aschur/ring.hpp"
#include "aschur/weight.hpp"

namespace aschur {

class HeckeElement {
 public:
  using TermMap = std::map<AffinePerm, LaurentPoly>;

  HeckeElement() = default;

  static HeckeElement t(const AffinePerm& w, const LaurentPoly& coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const AffinePerm& w) const;

  void add(const AffinePerm& w, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h);

  // Right multiplication by a single T_s.
  HeckeElement times_s(int i) const;

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  std::string to_string() const;  // "c1*T[w1] + ..."

 private:
  TermMap terms_;
};

HeckeElement t_element(const AffinePerm& w);
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

// Sum of T_w over the finite parabolic subgroup W_pi.
HeckeElement x_parabolic(const ParabolicIndex& pi);
// x_{lambda + t}.
HeckeElement x_lambda(const Weight& lambda, int t = 0);

struct RelationCheck {
  std::string name;
  bool pass = false;
};

// Relations (1)-(4) of the Coxeter-style presentation and (1')-(5') of its
// modified form, evaluated in the T_w basis for period r.
std::vector<RelationCheck> check_hecke_presentation(int r);

}  // namespace aschur
