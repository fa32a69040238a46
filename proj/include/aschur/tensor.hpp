#pragma once

// Tensor space V^{(x)r}, V with basis e_t for all integers t, under the
// quantum affine gl_n action and its classical (v = 1) counterpart.
//
// Words are applied right to left: the last symbol acts first.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "aschur/ring.hpp"
#include "aschur/weight.hpp"

namespace aschur {

struct TensorBasisVector {
  std::vector<int> idx;
  auto operator<=>(const TensorBasisVector&) const = default;
  int r() const { return static_cast<int>(idx.size()); }
  std::string to_string() const;  // "e[1,2]"
};

class TensorVector {
 public:
  using TermMap = std::map<TensorBasisVector, LaurentPoly>;

  TensorVector() = default;
  static TensorVector basis(const TensorBasisVector& b, const LaurentPoly& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const TensorBasisVector& b) const;

  void add(const TensorBasisVector& b, const LaurentPoly& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const LaurentPoly& c, const TensorVector& x);
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

enum class GenKind { E, F, K, Kinv, R, Rinv, Proj, ClassicalE, ClassicalF, ClassicalH };

// index is 1-based and read modulo n at action time. weight is used by Proj
// only.
struct GeneratorSymbol {
  GenKind kind = GenKind::E;
  int index = 0;
  std::vector<int> weight;

  auto operator<=>(const GeneratorSymbol&) const = default;

  static GeneratorSymbol E(int i) { return {GenKind::E, i, {}}; }
  static GeneratorSymbol F(int i) { return {GenKind::F, i, {}}; }
  static GeneratorSymbol K(int i) { return {GenKind::K, i, {}}; }
  static GeneratorSymbol Kinv(int i) { return {GenKind::Kinv, i, {}}; }
  static GeneratorSymbol R() { return {GenKind::R, 0, {}}; }
  static GeneratorSymbol Rinv() { return {GenKind::Rinv, 0, {}}; }
  static GeneratorSymbol Proj(const Weight& w) { return {GenKind::Proj, 0, w.parts()}; }
  static GeneratorSymbol e(int i) { return {GenKind::ClassicalE, i, {}}; }
  static GeneratorSymbol f(int i) { return {GenKind::ClassicalF, i, {}}; }
  static GeneratorSymbol H(int i) { return {GenKind::ClassicalH, i, {}}; }

  bool is_classical() const;
  std::string to_string() const;  // "E1", "K2^-1", "R", "P(1,1,0)", "e1", "H2"
};

using Word = std::vector<GeneratorSymbol>;
std::string word_to_string(const Word& w);
// Inverse of word_to_string; also accepts X^k for k > 0 as k copies of X,
// and "1" for the empty word. Throws std::invalid_argument.
Word parse_word(const std::string& text);

// A formal linear combination of words. No relations are applied; two
// expressions are compared by evaluating them.
class OperatorExpr {
 public:
  using TermMap = std::map<Word, LaurentPoly>;

  OperatorExpr() = default;
  OperatorExpr(const Word& w, const LaurentPoly& c = 1);  // NOLINT(google-explicit-constructor)
  OperatorExpr(const GeneratorSymbol& g);                 // NOLINT(google-explicit-constructor)
  static OperatorExpr identity() { return OperatorExpr(Word{}); }
  static OperatorExpr scalar(const LaurentPoly& c) { return OperatorExpr(Word{}, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t max_word_length() const;

  void add(const Word& w, const LaurentPoly& c);
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);  // concatenation
  friend OperatorExpr operator*(const LaurentPoly& c, const OperatorExpr& x);
  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

// g^k as a one-word expression.
OperatorExpr power(const GeneratorSymbol& g, int k);
// Product of single generators, left to right as written.
OperatorExpr chain(const std::vector<GeneratorSymbol>& gens);

// lambda_i = #{j : t_j = i mod n}.
Weight weight_of(int n, const TensorBasisVector& b);
TensorBasisVector shift(const TensorBasisVector& b, int k);

TensorVector act_generator(int n, const GeneratorSymbol& g, const TensorBasisVector& b);
TensorVector act_generator(int n, const GeneratorSymbol& g, const TensorVector& x);
TensorVector act_word(int n, const Word& w, const TensorVector& x);
TensorVector act(int n, const OperatorExpr& e, const TensorVector& x);

// e_i, f_i act without twist and H_i by lambda_i. Throws on quantum symbols.
TensorVector classical_act(int n, const GeneratorSymbol& g, const TensorBasisVector& b);

struct Window {
  int lo = 1;
  int hi = 1;
  std::string to_string() const;  // "[lo,hi]"
};
// [1 - L, n + L].
Window default_window(int n, int radius);

// All r-tuples with entries in the window.
std::vector<TensorBasisVector> window_basis(int r, const Window& w);
// Those of weight lambda.
std::vector<TensorBasisVector> weight_space_basis(const Weight& lambda, const Window& w);

enum class TauTarget { S, Rho, RhoInv, Sr };
enum class TauVariant { WithR, RFree };

// tau(T_w) as an operator on V_omega, with a trailing Proj_omega. For S the
// index i must satisfy 1 <= i < r. Throws if n <= r.
OperatorExpr tau(int n, int r, TauTarget w, TauVariant variant = TauVariant::WithR, int i = 0);

}  // namespace aschur
