#include "aschur/hecke.hpp"

#include <stdexcept>

namespace aschur {

HeckeElement HeckeElement::t(const AffinePerm& w, const LaurentPoly& coeff) {
  HeckeElement h;
  h.add(w, coeff);
  return h;
}

LaurentPoly HeckeElement::coeff(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const AffinePerm& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && terms_.begin()->first.r() != w.r())
    throw std::invalid_argument("Hecke elements with different periods");
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h) {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : h.terms_) out.terms_.emplace(w, c * x);
  return out;
}

HeckeElement HeckeElement::times_s(int i) const {
  static const LaurentPoly q = LaurentPoly::q();
  static const LaurentPoly qm1 = LaurentPoly::q() - 1;
  HeckeElement out;
  for (const auto& [x, c] : terms_) {
    AffinePerm xs = x * AffinePerm::s(x.r(), i);
    if (length(xs) > length(x)) {
      out.add(xs, c);
    } else {
      out.add(xs, q * c);
      out.add(x, qm1 * c);
    }
  }
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ")*T[" + w.to_string() + "]";
  }
  return s;
}

HeckeElement t_element(const AffinePerm& w) { return HeckeElement::t(w); }

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [y, cy] : b.terms()) {
    // T_x T_y = T_{x rho^z} T_{s_{i_1}} ... T_{s_{i_k}} for y = rho^z c.
    const AffinePerm rz = AffinePerm::rho(y.r(), y.z());
    HeckeElement acc;
    for (const auto& [x, cx] : a.terms()) acc.add(x * rz, cx * cy);
    for (int i : reduced_word(y)) acc = acc.times_s(i);
    out += acc;
  }
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return hecke_mul(a, b); }

HeckeElement x_parabolic(const ParabolicIndex& pi) {
  HeckeElement h;
  for (const auto& w : enumerate_parabolic(pi)) h.add(w, 1);
  return h;
}

HeckeElement x_lambda(const Weight& lambda, int t) { return x_parabolic(shifted_young_subgroup(lambda, t)); }

std::vector<RelationCheck> check_hecke_presentation(int r) {
  std::vector<RelationCheck> out;
  auto T = [r](int i) { return t_element(AffinePerm::s(r, i)); };
  const HeckeElement one = t_element(AffinePerm::identity(r));
  const HeckeElement rho = t_element(AffinePerm::rho(r));
  const HeckeElement rho_inv = t_element(AffinePerm::rho(r, -1));
  const LaurentPoly q = LaurentPoly::q();
  auto cyc = [r](int i) { return (i - 1 + r) % r + 1; };
  auto adjacent = [&](int i, int j) { return i != j && (cyc(i + 1) == j || cyc(j + 1) == i); };
  auto rec = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

  rec("rho rho^-1 = 1", rho * rho_inv == one && rho_inv * rho == one);
  for (int i = 1; i <= r; ++i) {
    std::string s = std::to_string(i);
    rec("(1) s" + s, T(i) * T(i) == (q - 1) * T(i) + q * one);
    int j = cyc(i + 1);
    rec("(4) s" + s, rho * T(j) * rho_inv == T(i));
    for (int k = i + 1; k <= r; ++k) {
      std::string tag = " s" + s + ",s" + std::to_string(k);
      if (adjacent(i, k))
        rec("(3)" + tag, T(i) * T(k) * T(i) == T(k) * T(i) * T(k));
      else
        rec("(2)" + tag, T(i) * T(k) == T(k) * T(i));
    }
  }
  HeckeElement rho_r = one, rho_mr = one;
  for (int k = 0; k < r; ++k) {
    rho_r = rho_r * rho;
    rho_mr = rho_mr * rho_inv;
  }
  for (int i = 1; i < r; ++i) {
    std::string s = std::to_string(i);
    rec("(1') s" + s, T(i) * T(i) == (q - 1) * T(i) + q * one);
    for (int k = i + 1; k < r; ++k) {
      std::string tag = " s" + s + ",s" + std::to_string(k);
      if (k - i > 1)
        rec("(2')" + tag, T(i) * T(k) == T(k) * T(i));
      else
        rec("(3')" + tag, T(i) * T(k) * T(i) == T(k) * T(i) * T(k));
    }
    if (i < r - 1) rec("(4') s" + s, rho * T(i + 1) * rho_inv == T(i));
    rec("(5') s" + s, rho_r * T(i) * rho_mr == T(i));
  }
  return out;
}

}  // namespace aschur
