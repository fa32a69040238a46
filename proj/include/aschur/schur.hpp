#pragma once

// The affine q-Schur algebra on the basis phi^d_{lambda,mu}, where d runs
// over minimal double coset representatives for W_lambda \ W^ / W_mu.
//
// phi^d_{lambda,mu} is the right-linear map x_mu H -> x_lambda H sending x_mu
// to the double coset sum over W_lambda d W_mu. Products a * b compose as
// maps: b is applied first.

#include <map>
#include <string>
#include <vector>

#include "aschur/hecke.hpp"
#include "aschur/weight.hpp"

namespace aschur {

struct SchurBasisIndex {
  Weight lambda;
  Weight mu;
  AffinePerm d;
  auto operator<=>(const SchurBasisIndex&) const = default;
  std::string to_string() const;  // "phi[lambda | d | mu]"
};

// Builds an index with d replaced by the minimal element of its double
// coset. `normalized` reports whether d changed.
SchurBasisIndex make_index(const Weight& lambda, const Weight& mu, const AffinePerm& d,
                           bool* normalized = nullptr);

bool is_double_coset_min(const Weight& lambda, const Weight& mu, const AffinePerm& d);

class SchurElement {
 public:
  using TermMap = std::map<SchurBasisIndex, LaurentPoly>;

  SchurElement() = default;
  static SchurElement basis(const SchurBasisIndex& idx, const LaurentPoly& coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const SchurBasisIndex& idx) const;

  void add(const SchurBasisIndex& idx, const LaurentPoly& c);
  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
  friend SchurElement operator*(const LaurentPoly& c, const SchurElement& x);
  friend bool operator==(const SchurElement&, const SchurElement&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

// phi^d_{lambda,mu}; throws if d is not minimal in its double coset.
SchurElement phi(const Weight& lambda, const Weight& mu, const AffinePerm& d);

// phi^d_{lambda,mu}(x_mu) as an element of H.
HeckeElement phi_value(const SchurBasisIndex& idx);

// Writes h, which must lie in x_lambda H and in the image of
// Hom(x_mu H, x_lambda H) evaluated at x_mu, in the phi basis. Throws
// std::logic_error if a nonzero remainder is left.
SchurElement expand_phi(const Weight& lambda, const Weight& mu, HeckeElement h);

SchurElement schur_mul(const SchurElement& a, const SchurElement& b);
SchurElement operator*(const SchurElement& a, const SchurElement& b);

// Sum of phi^1_{lambda,lambda} over Lambda(n, r).
SchurElement identity_element(int n, int r);

// T_d -> phi^d_{omega,omega}. Requires n >= r.
SchurElement hecke_embed(const HeckeElement& h, int n);
// d lies in the finite symmetric group S_r.
bool finite_subalgebra_check(const AffinePerm& d);

// Relations between phi_{omega,omega}^d, phi_{omega,lambda}^1 and
// phi_{lambda,omega}^1 for every lambda, mu in Lambda(n, r).
std::vector<RelationCheck> check_phi_relations(int n, int r);

}  // namespace aschur
