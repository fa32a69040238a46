#pragma once

// The extended affine Weyl group of type A_{r-1}, realized as bijections
// f of Z with f(t + r) = f(t) + r. Maps act on the right: in compose(a, b),
// a is applied first.
//
// Normal form: w = rho^z c, with c in the (non-extended) affine Weyl group
// W. `window` holds c(1), ..., c(r), so sum(window) = r(r+1)/2, and the full
// map is t -> c(t + z).

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aschur {

inline constexpr int kDefaultMaxLength = 8;

class AffinePerm {
 public:
  // Images f(1), ..., f(r) of the full map.
  static AffinePerm from_images(int r, const std::vector<int>& images);
  static AffinePerm from_normal_form(int r, int z, const std::vector<int>& window);
  static AffinePerm identity(int r);
  // Simple reflection s_i, 1 <= i <= r. s_r swaps r and r + 1.
  static AffinePerm s(int r, int i);
  static AffinePerm rho(int r, int power = 1);

  int r() const { return static_cast<int>(window_.size()); }
  int z() const { return z_; }
  const std::vector<int>& window() const { return window_; }

  // Full map t -> (t)w.
  int operator()(int t) const;
  std::vector<int> images() const;

  // W-part c, i.e. rho^{-z} w.
  AffinePerm w_part() const;
  bool is_identity() const;
  // Element of the finite symmetric group <s_1, ..., s_{r-1}>.
  bool in_finite_part() const;

  std::string to_string() const;  // "rho^z * [w1,...,wr]"
  // Accepts "rho^z * [..]", "[..]" and plain image lists "a,b,c".
  static AffinePerm parse(int r, const std::string& text);

  auto operator<=>(const AffinePerm&) const = default;

 private:
  AffinePerm(int z, std::vector<int> window) : z_(z), window_(std::move(window)) {}
  int z_ = 0;
  std::vector<int> window_;
};

// a first, then b.
AffinePerm compose(const AffinePerm& a, const AffinePerm& b);
AffinePerm operator*(const AffinePerm& a, const AffinePerm& b);
AffinePerm inverse(const AffinePerm& w);
// rho w rho^{-1}.
AffinePerm rho_conjugate(const AffinePerm& w);
// Product of simple reflections s_{i_1} ... s_{i_k}.
AffinePerm from_word(int r, const std::vector<int>& word);

// Coxeter length of the W-part.
int length(const AffinePerm& w);
// Reduced word of the W-part, by left-descent stripping (smallest index first).
std::vector<int> reduced_word(const AffinePerm& w);

// A proper subset of {1, ..., r}, stored sorted.
class ParabolicIndex {
 public:
  ParabolicIndex(int r, std::vector<int> gens);
  int r() const { return r_; }
  const std::vector<int>& gens() const { return gens_; }
  bool contains(int i) const;
  auto operator<=>(const ParabolicIndex&) const = default;

 private:
  int r_;
  std::vector<int> gens_;
};

// d in D_pi: l(s d) > l(d) for every s in pi.
bool is_distinguished(const AffinePerm& d, const ParabolicIndex& pi);
// d in D_pi^{-1}: l(d s) > l(d) for every s in pi.
bool is_distinguished_inverse(const AffinePerm& d, const ParabolicIndex& pi);

enum class CosetSide { Left, Right };

struct CosetDecomposition {
  AffinePerm parabolic;      // element of W_pi
  AffinePerm distinguished;  // minimal coset representative
};

// Left: w = parabolic * distinguished, distinguished in D_pi.
// Right: w = distinguished * parabolic, distinguished in D_pi^{-1}.
CosetDecomposition coset_decompose(const AffinePerm& w, const ParabolicIndex& pi, CosetSide side);

// Minimal-length element of W_{pi1} w W_{pi2}.
AffinePerm double_coset_min(const AffinePerm& w, const ParabolicIndex& pi1, const ParabolicIndex& pi2);

std::set<AffinePerm> enumerate_parabolic(const ParabolicIndex& pi);
std::set<AffinePerm> enumerate_double_coset(const ParabolicIndex& pi1, const AffinePerm& d,
                                            const ParabolicIndex& pi2);
// Elements of W (z = 0) of length <= max_len. Throws std::length_error when
// max_len exceeds `bound`.
std::set<AffinePerm> enumerate_up_to_length(int r, int max_len, int bound = kDefaultMaxLength);

struct SemidirectParts {
  AffinePerm finite;       // in <s_1, ..., s_{r-1}>
  AffinePerm translation;  // (t)translation = t mod r
};
// w = finite * translation.
SemidirectParts semidirect_decompose(const AffinePerm& w);

}  // namespace aschur
