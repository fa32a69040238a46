#include "aschur/schur.hpp"

#include <stdexcept>

namespace aschur {

std::string SchurBasisIndex::to_string() const {
  return "phi[" + lambda.to_string() + " | " + d.to_string() + " | " + mu.to_string() + "]";
}

namespace {

void check_compatible(const Weight& lambda, const Weight& mu, const AffinePerm& d) {
  if (lambda.n() != mu.n() || lambda.r() != mu.r() || lambda.r() != d.r())
    throw std::invalid_argument("phi index: weights and permutation disagree on (n, r)");
}

}  // namespace

SchurBasisIndex make_index(const Weight& lambda, const Weight& mu, const AffinePerm& d, bool* normalized) {
  check_compatible(lambda, mu, d);
  AffinePerm m = double_coset_min(d, young_subgroup(lambda), young_subgroup(mu));
  if (normalized) *normalized = !(m == d);
  return {lambda, mu, m};
}

bool is_double_coset_min(const Weight& lambda, const Weight& mu, const AffinePerm& d) {
  return is_distinguished(d, young_subgroup(lambda)) && is_distinguished_inverse(d, young_subgroup(mu));
}

SchurElement SchurElement::basis(const SchurBasisIndex& idx, const LaurentPoly& coeff) {
  SchurElement x;
  x.add(idx, coeff);
  return x;
}

LaurentPoly SchurElement::coeff(const SchurBasisIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void SchurElement::add(const SchurBasisIndex& idx, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty()) {
    const auto& first = terms_.begin()->first;
    if (first.lambda.n() != idx.lambda.n() || first.lambda.r() != idx.lambda.r())
      throw std::invalid_argument("Schur elements with different (n, r)");
  }
  auto [it, inserted] = terms_.emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

SchurElement operator*(const LaurentPoly& c, const SchurElement& x) {
  SchurElement out;
  if (c.is_zero()) return out;
  for (const auto& [k, y] : x.terms_) out.terms_.emplace(k, c * y);
  return out;
}

std::string SchurElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ") * " + k.to_string();
  }
  return s;
}

SchurElement phi(const Weight& lambda, const Weight& mu, const AffinePerm& d) {
  check_compatible(lambda, mu, d);
  if (!is_double_coset_min(lambda, mu, d))
    throw std::invalid_argument("phi: d is not minimal in its double coset");
  return SchurElement::basis({lambda, mu, d});
}

HeckeElement phi_value(const SchurBasisIndex& idx) {
  check_compatible(idx.lambda, idx.mu, idx.d);
  if (!is_double_coset_min(idx.lambda, idx.mu, idx.d))
    throw std::invalid_argument("phi_value: d is not minimal in its double coset");
  HeckeElement h;
  for (const auto& w : enumerate_double_coset(young_subgroup(idx.lambda), idx.d, young_subgroup(idx.mu)))
    h.add(w, 1);
  return h;
}

SchurElement expand_phi(const Weight& lambda, const Weight& mu, HeckeElement h) {
  SchurElement out;
  while (!h.is_zero()) {
    // A minimal-length support element is minimal in its double coset.
    const AffinePerm* best = nullptr;
    int best_len = 0;
    for (const auto& [w, c] : h.terms()) {
      int l = length(w);
      if (!best || l < best_len) {
        best = &w;
        best_len = l;
      }
    }
    AffinePerm d = *best;
    LaurentPoly c = h.coeff(d);
    if (!is_double_coset_min(lambda, mu, d))
      throw std::logic_error("phi expansion failed: " + d.to_string() + " is not a minimal representative");
    SchurBasisIndex idx{lambda, mu, d};
    HeckeElement sub = phi_value(idx);
    for (const auto& [w, one] : sub.terms()) {
      if (h.coeff(w) != c)
        throw std::logic_error("phi expansion failed: coefficients are not constant on the double coset of " +
                               d.to_string());
    }
    h -= c * sub;
    out.add(idx, c);
  }
  return out;
}

SchurElement schur_mul(const SchurElement& a, const SchurElement& b) {
  SchurElement out;
  for (const auto& [ib, cb] : b.terms()) {
    // b(x_nu) = x_mu h', with h' the sum of T_m over the minimal left
    // coset representatives in W_mu d W_nu.
    const ParabolicIndex pmu = young_subgroup(ib.lambda);
    HeckeElement hprime;
    for (const auto& m : enumerate_double_coset(pmu, ib.d, young_subgroup(ib.mu)))
      if (is_distinguished(m, pmu)) hprime.add(m, 1);
    for (const auto& [ia, ca] : a.terms()) {
      if (ia.mu != ib.lambda) continue;
      HeckeElement value = phi_value(ia) * hprime;
      out += (ca * cb) * expand_phi(ia.lambda, ib.mu, value);
    }
  }
  return out;
}

SchurElement operator*(const SchurElement& a, const SchurElement& b) { return schur_mul(a, b); }

SchurElement identity_element(int n, int r) {
  SchurElement out;
  for (const auto& lam : all_weights(n, r)) out.add({lam, lam, AffinePerm::identity(r)}, 1);
  return out;
}

SchurElement hecke_embed(const HeckeElement& h, int n) {
  SchurElement out;
  for (const auto& [w, c] : h.terms()) {
    if (n < w.r()) throw std::invalid_argument("hecke_embed needs n >= r");
    Weight om = Weight::omega(n, w.r());
    out.add({om, om, w}, c);
  }
  return out;
}

bool finite_subalgebra_check(const AffinePerm& d) { return d.in_finite_part(); }

std::vector<RelationCheck> check_phi_relations(int n, int r) {
  std::vector<RelationCheck> out;
  const Weight om = Weight::omega(n, r);
  const AffinePerm id = AffinePerm::identity(r);
  const LaurentPoly q = LaurentPoly::q();
  const auto weights = all_weights(n, r);
  for (const auto& lam : weights) {
    SchurElement om_lam = phi(om, lam, id);
    SchurElement lam_om = phi(lam, om, id);
    for (const auto& mu : weights) {
      SchurElement lhs = om_lam * phi(mu, om, id);
      SchurElement rhs;
      if (lam == mu)
        for (const auto& d : enumerate_parabolic(young_subgroup(lam))) rhs.add({om, om, d}, 1);
      out.push_back({"Q17 lambda=" + lam.to_string() + " mu=" + mu.to_string(), lhs == rhs});
    }
    const ParabolicIndex young = young_subgroup(lam);
    for (int i : young.gens()) {
      SchurElement s = phi(om, om, AffinePerm::s(r, i));
      std::string tag = " lambda=" + lam.to_string() + " s" + std::to_string(i);
      out.push_back({"Q18" + tag, s * om_lam == q * om_lam});
      out.push_back({"Q19" + tag, lam_om * s == q * lam_om});
    }
  }
  return out;
}

}  // namespace aschur
