#pragma once

// The presented algebra T, handled through its action on tensor space:
// relation suites, weight idempotents, the automorphisms nu and sigma,
// distinguished monomials, zeta elements and the surjectivity monomials.

#include <optional>
#include <string>
#include <vector>

#include "aschur/tensor.hpp"

namespace aschur {

struct RelationInstance {
  std::string name;    // "Q5 i=1 j=2"
  OperatorExpr lhs;
  OperatorExpr rhs;
  std::optional<Window> window;  // overrides the default window
};

struct IdentityReport {
  bool pass = true;
  Window window;
  size_t inputs = 0;
  std::optional<TensorBasisVector> counterexample;
  TensorVector lhs_value;  // at the counterexample
  TensorVector rhs_value;
};

// Index-moving letters in the longest word of either side.
int relation_radius(const RelationInstance& inst);
Window window_for(int n, const RelationInstance& inst, std::optional<int> max_radius = std::nullopt);

// Evaluates both sides on every window basis vector, in lexicographic order.
// When every word on both sides ends in the same projector, only that weight
// space is enumerated.
IdentityReport verify_identity(int n, int r, const RelationInstance& inst, const Window& window);

std::vector<std::string> suite_names();
// Operator-based suites. Throws std::invalid_argument for unknown names, for
// "q17-19" (which lives in the phi-basis engine), and for n <= r.
std::vector<RelationInstance> suite(const std::string& name, int n, int r);

struct RelationResult {
  std::string suite;
  std::string name;
  std::string window;  // "[lo,hi]" or "phi-basis"
  size_t inputs = 0;
  bool pass = false;
  std::string counterexample;
};

std::vector<RelationResult> run_suite(const std::string& name, int n, int r,
                                      std::optional<int> max_radius = std::nullopt);

// The deliberately wrong K_1...K_n = v^(r+1) on V_omega.
RelationInstance corrupted_q15(int n, int r);

// --- weight idempotents

OperatorExpr projector(const Weight& lambda);

struct Fraction {
  OperatorExpr numerator;
  LaurentPoly denominator;
};
// prod_i [K_i; lambda_i], [K; t] = prod_{s=1}^t (K v^{1-s} - K^{-1} v^{s-1}) / (v^s - v^{-s}).
Fraction binomial_projector(const Weight& lambda);
// Applies a fraction; throws std::logic_error if the division is not exact.
TensorVector act(int n, const Fraction& f, const TensorVector& x);

// sum_lambda v^{lambda_i} 1_lambda
OperatorExpr k_from_projectors(int n, int r, int i);

// --- automorphisms

// E_i -> E_{i+1}, F_i -> F_{i+1}, K_i -> K_{i+1}, 1_lambda -> 1_{lambda_+}; R fixed.
OperatorExpr rotate_aut(int n, const OperatorExpr& x);
// Reverses each word and swaps E and F. Throws on R.
OperatorExpr sigma_antiaut(const OperatorExpr& x);

// E_i 1_lambda -> 1_{lambda + alpha_i} E_i, or 0 when lambda_{i+1} = 0;
// F_i 1_lambda -> 1_{lambda - alpha_i} F_i, or 0 when lambda_i = 0.
OperatorExpr commute_projector(const GeneratorSymbol& g, const Weight& lambda);

enum class CancelDirection { FE, EF };
// F_i^c E_i^c 1_lambda = ([c]!)^2 [lambda_{i+1} choose c] 1_lambda when lambda_i = 0,
// E_i^c F_i^c 1_lambda = ([c]!)^2 [lambda_i choose c] 1_lambda when lambda_{i+1} = 0.
LaurentPoly cancellation(const Weight& lambda, int i, int c, CancelDirection dir);

// --- distinguished monomials

struct DistinguishedTerm {
  GenKind kind = GenKind::Proj;  // E, F, or Proj for c = 0
  int index = 0;
  int c = 0;
  Weight right;            // the 1_lambda of the term
  std::vector<int> left;   // may have negative parts when the term is zero
  bool nonzero = false;
};

struct DistinguishedAnalysis {
  bool parsed = false;                   // strict, or a recognized reduction
  bool strictly_distinguished = false;
  std::vector<DistinguishedTerm> terms;  // left to right
  std::optional<Word> reduction_of;      // set when the input is a reduction
  bool nonzero = false;
};

// Words over E, F and projectors; throws otherwise.
DistinguishedAnalysis distinguished_analyze(int n, const Word& w);

// --- zeta

enum class ZetaTarget { S, Rho, RhoInv, Sr };
enum class ZetaForm { Printed, Normalized };
// For S, 1 <= i < r. The two forms differ only for Sr:
//   printed     1_w (F_n...F_r E_r...E_n - v^-1)
//   normalized  1_w (v F_n...F_r E_r...E_n - 1)
OperatorExpr zeta(int n, int r, ZetaTarget w, int i = 0, ZetaForm form = ZetaForm::Printed);

// --- surjectivity monomials

struct Monomial {
  Word word;  // strictly distinguished, with a projector after every term
  Weight source;
  Weight target;
};

// Bubbles the zero parts of lambda to the right with E_2..E_{n-1}.
Monomial build_m1(const Weight& lambda);
// Spreads the blocks of mu to the positions 1 + mu_1 + ... + mu_i.
Weight nu_of(const Weight& mu);
Monomial build_m2(const Weight& mu);
// Splits each segment (m, 0^(m-1)) of nu into ones.
Monomial build_m3(const Weight& nu);
// M = 1_w M3 1_nu M2 1_mu M1 1_lambda. Requires lambda_1 > 0 and n > r.
Monomial build_m(const Weight& lambda);

struct MonomialConditions {
  bool nonzero = false;
  bool sandwich = false;
  bool avoids_forbidden = false;  // no E_n, F_n, E_1, F_{n-1}
  bool consecutive = false;       // F_1 letters together, E_{n-1} letters together
  bool f1_bound = false;          // at most lambda_1 - 1 letters F_1
  bool all() const { return nonzero && sandwich && avoids_forbidden && consecutive && f1_bound; }
};
// Operator checks run on weight_space_basis(source, window); the default
// window is [1, n], which the letters of M preserve.
MonomialConditions check_m_conditions(const Monomial& m, std::optional<Window> window = std::nullopt);

// The letters of w, projectors dropped.
Word strip_projectors(const Word& w);

struct EnFactor {
  LaurentPoly z_num;
  LaurentPoly z_den;
  Monomial m;
  bool verified = false;
  Window window;
};
// E_n 1_lambda = z sigma(L) (E_n 1_w) L 1_lambda with L the letters of M and
// z = z_num / z_den, checked by evaluation. Throws on lambda_1 = 0 or n <= r,
// and std::logic_error if the two sides are not proportional.
EnFactor factor_en(const Weight& lambda, std::optional<int> max_radius = std::nullopt);

}  // namespace aschur
