#include "aschur/present.hpp"

#include <algorithm>
#include <stdexcept>

#include "aschur/schur.hpp"

namespace aschur {

namespace {

using G = GeneratorSymbol;

int cyc(int i, int n) { return ((i - 1) % n + n) % n + 1; }

bool adjacent(int i, int j, int n) {
  int d = ((i - j) % n + n) % n;
  return d == 1 || d == n - 1;
}

LaurentPoly vpow(int k) { return LaurentPoly::monomial(k); }

OperatorExpr one() { return OperatorExpr::identity(); }
OperatorExpr scalar(const LaurentPoly& c) { return OperatorExpr::scalar(c); }

std::string ij(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }
std::string at_i(int i) { return "i=" + std::to_string(i); }

int eps_plus(int i, int j, int n) {
  if (cyc(i, n) == cyc(j, n)) return 1;
  if (cyc(j, n) == cyc(i - 1, n)) return -1;
  return 0;
}

bool moves_indices(const G& g) {
  switch (g.kind) {
    case GenKind::E:
    case GenKind::F:
    case GenKind::R:
    case GenKind::Rinv:
    case GenKind::ClassicalE:
    case GenKind::ClassicalF:
      return true;
    default:
      return false;
  }
}

int moving_length(const OperatorExpr& e) {
  int m = 0;
  for (const auto& [w, c] : e.terms())
    m = std::max(m, static_cast<int>(std::count_if(w.begin(), w.end(), moves_indices)));
  return m;
}

// The common trailing projector of every word, if there is one.
std::optional<std::vector<int>> trailing_projector(const OperatorExpr& a, const OperatorExpr& b) {
  std::optional<std::vector<int>> found;
  for (const OperatorExpr* e : {&a, &b})
    for (const auto& [w, c] : e->terms()) {
      if (w.empty() || w.back().kind != GenKind::Proj) return std::nullopt;
      if (found && *found != w.back().weight) return std::nullopt;
      found = w.back().weight;
    }
  return found;
}

void need_affine(int n, int r) {
  if (n <= r) throw std::invalid_argument("needs n > r (got n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  if (r < 1) throw std::invalid_argument("needs r >= 1");
}

// --- suites

void add(std::vector<RelationInstance>& out, std::string name, OperatorExpr lhs, OperatorExpr rhs,
         std::optional<Window> window = std::nullopt) {
  out.push_back({std::move(name), std::move(lhs), std::move(rhs), window});
}

// (Q1)-(Q9) with E_i, F_i for i in [1, top] and K_i for i in [1, n].
void quantum_relations(std::vector<RelationInstance>& out, int n, int top, bool cyclic, std::optional<Window> win) {
  const LaurentPoly d = vpow(1) - vpow(-1);
  const LaurentPoly two = quantum_int(2);
  auto adj = [&](int i, int j) { return cyclic ? adjacent(i, j, n) : std::abs(i - j) == 1; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) add(out, "Q1 " + ij(i, j), chain({G::K(i), G::K(j)}), chain({G::K(j), G::K(i)}), win);
  for (int i = 1; i <= n; ++i) {
    add(out, "Q2 " + at_i(i) + " K K^-1", chain({G::K(i), G::Kinv(i)}), one(), win);
    add(out, "Q2 " + at_i(i) + " K^-1 K", chain({G::Kinv(i), G::K(i)}), one(), win);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= top; ++j) {
      int e = eps_plus(i, j, n);
      add(out, "Q3 " + ij(i, j), chain({G::K(i), G::E(j)}), vpow(e) * chain({G::E(j), G::K(i)}), win);
      add(out, "Q4 " + ij(i, j), chain({G::K(i), G::F(j)}), vpow(-e) * chain({G::F(j), G::K(i)}), win);
    }
  // Both sides multiplied by v - v^-1.
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= top; ++j) {
      OperatorExpr lhs = d * (chain({G::E(i), G::F(j)}) - chain({G::F(j), G::E(i)}));
      OperatorExpr rhs;
      if (i == j) rhs = chain({G::K(i), G::Kinv(i + 1)}) - chain({G::Kinv(i), G::K(i + 1)});
      add(out, "Q5 " + ij(i, j), lhs, rhs, win);
    }
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) {
      if (adj(i, j)) continue;
      add(out, "Q6 " + ij(i, j), chain({G::E(i), G::E(j)}), chain({G::E(j), G::E(i)}), win);
      add(out, "Q7 " + ij(i, j), chain({G::F(i), G::F(j)}), chain({G::F(j), G::F(i)}), win);
    }
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= top; ++j) {
      if (i == j || !adj(i, j)) continue;
      OperatorExpr e = chain({G::E(i), G::E(i), G::E(j)}) - two * chain({G::E(i), G::E(j), G::E(i)}) +
                       chain({G::E(j), G::E(i), G::E(i)});
      OperatorExpr f = chain({G::F(j), G::F(j), G::F(i)}) - two * chain({G::F(j), G::F(i), G::F(j)}) +
                       chain({G::F(i), G::F(j), G::F(j)});
      add(out, "Q8 " + ij(i, j), e, {}, win);
      add(out, "Q9 " + ij(i, j), f, {}, win);
    }
}

void schur_relations(std::vector<RelationInstance>& out, int n, int r, std::optional<Window> win) {
  std::vector<G> ks;
  for (int i = 1; i <= n; ++i) ks.push_back(G::K(i));
  add(out, "Q15", chain(ks), scalar(vpow(r)), win);
  for (int i = 1; i <= n; ++i) {
    OperatorExpr prod = one();
    for (int k = 0; k <= r; ++k) prod = prod * (OperatorExpr(G::K(i)) - scalar(vpow(k)));
    add(out, "Q16 " + at_i(i), prod, {}, win);
  }
}

std::vector<RelationInstance> qaffine_suite(int n) {
  std::vector<RelationInstance> out;
  quantum_relations(out, n, n, true, std::nullopt);
  return out;
}

std::vector<RelationInstance> extended_suite(int n) {
  std::vector<RelationInstance> out;
  add(out, "Q10 R R^-1", chain({G::R(), G::Rinv()}), one());
  add(out, "Q10 R^-1 R", chain({G::Rinv(), G::R()}), one());
  for (int i = 1; i <= n; ++i) {
    int k = cyc(i + 1, n);
    add(out, "Q11 " + at_i(i), chain({G::Rinv(), G::K(k), G::R()}), G::K(i));
    add(out, "Q12 " + at_i(i), chain({G::Rinv(), G::Kinv(k), G::R()}), G::Kinv(i));
    add(out, "Q13 " + at_i(i), chain({G::Rinv(), G::E(k), G::R()}), G::E(i));
    add(out, "Q14 " + at_i(i), chain({G::Rinv(), G::F(k), G::R()}), G::F(i));
  }
  return out;
}

std::vector<RelationInstance> schur_presentation_suite(int n, int r) {
  std::vector<RelationInstance> out;
  schur_relations(out, n, r, std::nullopt);
  return out;
}

// V' = span of e_1..e_n, preserved by E_i, F_i (i < n) and K_i.
std::vector<RelationInstance> finite_schur_suite(int n, int r) {
  std::vector<RelationInstance> out;
  Window w{1, n};
  quantum_relations(out, n, n - 1, false, w);
  schur_relations(out, n, r, w);
  return out;
}

void hecke_relations(std::vector<RelationInstance>& out, int n, int r, TauVariant variant) {
  const std::string tag = variant == TauVariant::WithR ? " tau" : " tau'";
  const LaurentPoly q = vpow(2);
  const OperatorExpr p = projector(Weight::omega(n, r));
  auto T = [&](int i) { return tau(n, r, TauTarget::S, variant, i); };
  const OperatorExpr rho = tau(n, r, TauTarget::Rho, variant);
  const OperatorExpr rinv = tau(n, r, TauTarget::RhoInv, variant);
  add(out, "rho rho^-1" + tag, rho * rinv, p);
  add(out, "rho^-1 rho" + tag, rinv * rho, p);
  OperatorExpr rho_r = p, rinv_r = p;
  for (int k = 0; k < r; ++k) {
    rho_r = rho_r * rho;
    rinv_r = rinv_r * rinv;
  }
  for (int i = 1; i < r; ++i) {
    add(out, "(1') " + at_i(i) + tag, T(i) * T(i), (q - 1) * T(i) + q * p);
    for (int k = i + 1; k < r; ++k) {
      if (k - i > 1)
        add(out, "(2') " + ij(i, k) + tag, T(i) * T(k), T(k) * T(i));
      else
        add(out, "(3') " + ij(i, k) + tag, T(i) * T(k) * T(i), T(k) * T(i) * T(k));
    }
    if (i < r - 1) add(out, "(4') " + at_i(i) + tag, rho * T(i + 1) * rinv, T(i));
    add(out, "(5') " + at_i(i) + tag, rho_r * T(i) * rinv_r, T(i));
  }
  if (r >= 2) {
    OperatorExpr sr = tau(n, r, TauTarget::Sr, variant);
    add(out, "(1) i=" + std::to_string(r) + tag, sr * sr, (q - 1) * sr + q * p);
  }
}

std::vector<RelationInstance> hecke_tau_suite(int n, int r) {
  std::vector<RelationInstance> out;
  hecke_relations(out, n, r, TauVariant::WithR);
  hecke_relations(out, n, r, TauVariant::RFree);
  const OperatorExpr p = projector(Weight::omega(n, r));
  std::vector<G> fs, es;
  for (int k = 1; k <= r; ++k) fs.push_back(G::F(k));
  for (int k = r - 1; k >= 1; --k) es.push_back(G::E(k));
  es.push_back(G::E(n));
  add(out, "R = F_1...F_r on V_w", OperatorExpr(G::R()) * p, chain(fs) * p);
  add(out, "R^-1 = E_{r-1}...E_1 E_n on V_w", OperatorExpr(G::Rinv()) * p, chain(es) * p);
  for (auto t : {TauTarget::Rho, TauTarget::RhoInv})
    add(out, std::string(t == TauTarget::Rho ? "rho" : "rho^-1") + " tau = tau'", tau(n, r, t, TauVariant::WithR),
        tau(n, r, t, TauVariant::RFree));
  return out;
}

std::vector<RelationInstance> idempotented_suite(int n, int r, bool classical) {
  std::vector<RelationInstance> out;
  const std::string pre = classical ? "r" : "R";
  const auto weights = all_weights(n, r);
  auto E = [&](int i) { return classical ? G::e(i) : G::E(i); };
  auto F = [&](int i) { return classical ? G::f(i) : G::F(i); };
  OperatorExpr total;
  for (const auto& lam : weights) {
    total += projector(lam);
    for (const auto& mu : weights)
      add(out, pre + "1 " + lam.to_string() + " " + mu.to_string(), projector(lam) * projector(mu),
          lam == mu ? projector(lam) : OperatorExpr());
  }
  add(out, pre + "1 sum", total, one());
  for (int i = 1; i <= n; ++i)
    for (const auto& lam : weights) {
      OperatorExpr e_rhs, f_rhs;
      if (lam.at(i + 1) > 0) e_rhs = projector(Weight(add_root(lam.parts(), i, 1))) * OperatorExpr(E(i));
      if (lam.at(i) > 0) f_rhs = projector(Weight(add_root(lam.parts(), i, -1))) * OperatorExpr(F(i));
      add(out, pre + "2 " + at_i(i) + " " + lam.to_string(), OperatorExpr(E(i)) * projector(lam), e_rhs);
      add(out, pre + "3 " + at_i(i) + " " + lam.to_string(), OperatorExpr(F(i)) * projector(lam), f_rhs);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      OperatorExpr rhs;
      if (i == j)
        for (const auto& lam : weights) {
          int m = lam.at(j) - lam.at(j + 1);
          rhs += (classical ? LaurentPoly(m) : quantum_int(m)) * projector(lam);
        }
      add(out, pre + "4 " + ij(i, j), chain({E(i), F(j)}) - chain({F(j), E(i)}), rhs);
    }
  return out;
}

std::vector<RelationInstance> idempotented_full(int n, int r) {
  std::vector<RelationInstance> out = idempotented_suite(n, r, false);
  for (auto& inst : qaffine_suite(n))
    if (inst.name.rfind("Q6", 0) == 0 || inst.name.rfind("Q7", 0) == 0 || inst.name.rfind("Q8", 0) == 0 ||
        inst.name.rfind("Q9", 0) == 0)
      out.push_back(std::move(inst));
  return out;
}

std::vector<RelationInstance> zeta_suite(int n, int r) {
  std::vector<RelationInstance> out;
  const LaurentPoly v = vpow(1);
  const OperatorExpr p = projector(Weight::omega(n, r));
  const OperatorExpr zr = zeta(n, r, ZetaTarget::Rho);
  const OperatorExpr zri = zeta(n, r, ZetaTarget::RhoInv);
  auto zs = [&](int i) { return zeta(n, r, ZetaTarget::S, i); };
  auto fe = [&](int i) { return chain({G::F(i), G::E(i)}); };
  auto ef = [&](int i) { return chain({G::E(i), G::F(i)}); };

  std::vector<G> w;
  w.push_back(G::F(n));
  for (int k = 1; k < r; ++k) w.push_back(G::F(k));
  for (int k = n - 1; k >= r; --k) w.push_back(G::F(k));
  add(out, "zeta rho^-1 regrouped", zri, chain(w) * p);
  w.clear();
  for (int k = r; k >= 1; --k) w.push_back(G::E(k));
  for (int k = r + 1; k <= n; ++k) w.push_back(G::E(k));
  add(out, "zeta rho regrouped", zr, chain(w) * p);

  add(out, "zeta rho^-1 rho = 1_w", zri * zr, p);
  add(out, "zeta rho rho^-1 = 1_w", zr * zri, p);

  w.clear();
  for (int k = r - 1; k >= 1; --k) w.push_back(G::E(k));
  for (int k = r + 1; k <= n; ++k) w.push_back(G::E(k));
  const OperatorExpr m = chain(w) * p;
  for (int i = 2; i < r; ++i) {
    add(out, "M conjugation " + at_i(i), (v * fe(i - 1) - one()) * m, m * (v * fe(i) - one()));
    add(out, "zeta s_{i-1} rho = rho s_i " + at_i(i), zs(i - 1) * zr, zr * zs(i));
  }

  // The printed two-sided swaps, and the forms with -v^-1 on both sides.
  const LaurentPoly vi = vpow(-1);
  for (int i = 2; i < r; ++i) {
    add(out, "FE-EF swap " + at_i(i) + " printed", (fe(i) - scalar(vi)) * p, (ef(i) - scalar(v)) * p);
    add(out, "FE-EF swap " + at_i(i) + " commuted", (fe(i) - scalar(vi)) * p, (ef(i) - scalar(vi)) * p);
  }
  std::vector<G> fdown, eup;
  for (int k = n; k >= r; --k) fdown.push_back(G::F(k));
  for (int k = r; k <= n; ++k) eup.push_back(G::E(k));
  const OperatorExpr fdeu = chain(fdown) * chain(eup);
  const OperatorExpr eufd = chain(eup) * chain(fdown);
  add(out, "long FE-EF swap printed", p * (fdeu - scalar(vi)), p * (eufd - scalar(v)));
  add(out, "long FE-EF swap commuted", p * (fdeu - scalar(vi)), p * (eufd - scalar(vi)));
  add(out, "E_n F_n swap", (ef(n) - scalar(v)) * chain({G::E(1), G::E(n)}) * p,
      chain({G::E(1), G::E(n)}) * (ef(1) - scalar(v)) * p);
  w.clear();
  for (int k = r; k >= 1; --k) w.push_back(G::E(k));
  if (r >= 2)
    add(out, "E_r...E_1 swap", p * (fe(r - 1) - scalar(vi)) * chain(w), p * chain(w) * (fe(r) - scalar(vi)));

  if (r >= 2) {
    for (auto form : {ZetaForm::Printed, ZetaForm::Normalized}) {
      const std::string tag = form == ZetaForm::Printed ? " printed" : " normalized";
      const OperatorExpr zsr = zeta(n, r, ZetaTarget::Sr, 0, form);
      add(out, "zeta rho s_r = s_{r-1} rho" + tag, zr * zsr, zs(r - 1) * zr);
      add(out, "zeta rho s_1 = s_r rho" + tag, zr * zs(1), zsr * zr);
    }
  }
  return out;
}

std::vector<RelationInstance> classical_suite(int n, int r) {
  std::vector<RelationInstance> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) add(out, "q1 " + ij(i, j), chain({G::H(i), G::H(j)}), chain({G::H(j), G::H(i)}));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int e = eps_plus(i, j, n);
      add(out, "q2 " + ij(i, j), chain({G::H(i), G::e(j)}) - chain({G::e(j), G::H(i)}), LaurentPoly(e) * OperatorExpr(G::e(j)));
      add(out, "q3 " + ij(i, j), chain({G::H(i), G::f(j)}) - chain({G::f(j), G::H(i)}), LaurentPoly(-e) * OperatorExpr(G::f(j)));
      OperatorExpr rhs;
      if (i == j) rhs = OperatorExpr(G::H(j)) - OperatorExpr(G::H(j + 1));
      add(out, "q4 " + ij(i, j), chain({G::e(i), G::f(j)}) - chain({G::f(j), G::e(i)}), rhs);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (adjacent(i, j, n)) continue;
      add(out, "q5 " + ij(i, j), chain({G::e(i), G::e(j)}), chain({G::e(j), G::e(i)}));
      add(out, "q6 " + ij(i, j), chain({G::f(i), G::f(j)}), chain({G::f(j), G::f(i)}));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || !adjacent(i, j, n)) continue;
      OperatorExpr e = chain({G::e(i), G::e(i), G::e(j)}) - LaurentPoly(2) * chain({G::e(i), G::e(j), G::e(i)}) +
                       chain({G::e(j), G::e(i), G::e(i)});
      OperatorExpr f = chain({G::f(i), G::f(i), G::f(j)}) - LaurentPoly(2) * chain({G::f(i), G::f(j), G::f(i)}) +
                       chain({G::f(j), G::f(i), G::f(i)});
      add(out, "q7 " + ij(i, j), e, {});
      add(out, "q8 " + ij(i, j), f, {});
    }
  OperatorExpr hsum;
  for (int i = 1; i <= n; ++i) hsum += G::H(i);
  add(out, "q9", hsum, scalar(r));
  for (int i = 1; i <= n; ++i) {
    OperatorExpr prod = one();
    for (int k = 0; k <= r; ++k) prod = prod * (OperatorExpr(G::H(i)) - scalar(k));
    add(out, "q10 " + at_i(i), prod, {});
  }
  for (auto& inst : idempotented_suite(n, r, true)) out.push_back(std::move(inst));
  return out;
}

std::string vector_text(const TensorVector& x) { return x.to_string(); }

}  // namespace

// --- verification

int relation_radius(const RelationInstance& inst) { return std::max(moving_length(inst.lhs), moving_length(inst.rhs)); }

Window window_for(int n, const RelationInstance& inst, std::optional<int> max_radius) {
  if (inst.window) return *inst.window;
  int radius = relation_radius(inst);
  if (max_radius) radius = std::min(radius, *max_radius);
  return default_window(n, radius);
}

IdentityReport verify_identity(int n, int r, const RelationInstance& inst, const Window& window) {
  IdentityReport rep;
  rep.window = window;
  std::vector<TensorBasisVector> inputs;
  if (auto p = trailing_projector(inst.lhs, inst.rhs); p && static_cast<int>(p->size()) == n)
    inputs = weight_space_basis(Weight(*p), window);
  else
    inputs = window_basis(r, window);
  rep.inputs = inputs.size();
  for (const auto& b : inputs) {
    TensorVector x = TensorVector::basis(b);
    TensorVector a = act(n, inst.lhs, x);
    TensorVector c = act(n, inst.rhs, x);
    if (a != c) {
      rep.pass = false;
      rep.counterexample = b;
      rep.lhs_value = a;
      rep.rhs_value = c;
      return rep;
    }
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"qaffine", "extended", "schur-presentation", "finite-schur", "q17-19",
          "hecke-tau", "idempotented", "zeta", "classical"};
}

std::vector<RelationInstance> suite(const std::string& name, int n, int r) {
  if (name == "finite-schur") {
    if (n < 2 || r < 1) throw std::invalid_argument("finite-schur needs n >= 2 and r >= 1");
    return finite_schur_suite(n, r);
  }
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  if (name == "q17-19") throw std::invalid_argument("q17-19 is checked in the phi-basis engine; use run_suite");
  need_affine(n, r);
  if (name == "qaffine") return qaffine_suite(n);
  if (name == "extended") return extended_suite(n);
  if (name == "schur-presentation") return schur_presentation_suite(n, r);
  if (name == "hecke-tau") return hecke_tau_suite(n, r);
  if (name == "idempotented") return idempotented_full(n, r);
  if (name == "zeta") return zeta_suite(n, r);
  return classical_suite(n, r);
}

std::vector<RelationResult> run_suite(const std::string& name, int n, int r, std::optional<int> max_radius) {
  std::vector<RelationResult> out;
  if (name == "q17-19") {
    need_affine(n, r);
    for (const auto& c : check_phi_relations(n, r)) out.push_back({name, c.name, "phi-basis", 0, c.pass, ""});
    return out;
  }
  for (const auto& inst : suite(name, n, r)) {
    Window w = window_for(n, inst, max_radius);
    IdentityReport rep = verify_identity(n, r, inst, w);
    RelationResult res{name, inst.name, w.to_string(), rep.inputs, rep.pass, ""};
    if (!rep.pass)
      res.counterexample = rep.counterexample->to_string() + ": lhs = " + vector_text(rep.lhs_value) +
                           ", rhs = " + vector_text(rep.rhs_value);
    out.push_back(std::move(res));
  }
  return out;
}

RelationInstance corrupted_q15(int n, int r) {
  std::vector<G> ks;
  for (int i = 1; i <= n; ++i) ks.push_back(G::K(i));
  OperatorExpr p = projector(Weight::omega(n, r));
  return {"Q15 corrupted", chain(ks) * p, vpow(r + 1) * p, std::nullopt};
}

// --- weight idempotents

OperatorExpr projector(const Weight& lambda) { return G::Proj(lambda); }

Fraction binomial_projector(const Weight& lambda) {
  Fraction f{one(), 1};
  for (int i = 1; i <= lambda.n(); ++i)
    for (int s = 1; s <= lambda.at(i); ++s) {
      f.numerator = f.numerator * (vpow(1 - s) * OperatorExpr(G::K(i)) - vpow(s - 1) * OperatorExpr(G::Kinv(i)));
      f.denominator *= vpow(s) - vpow(-s);
    }
  return f;
}

TensorVector act(int n, const Fraction& f, const TensorVector& x) {
  TensorVector num = act(n, f.numerator, x);
  TensorVector out;
  for (const auto& [b, c] : num.terms()) {
    auto qt = c.divide_exact(f.denominator);
    if (!qt) throw std::logic_error("fraction does not divide exactly at " + b.to_string());
    out.add(b, *qt);
  }
  return out;
}

OperatorExpr k_from_projectors(int n, int r, int i) {
  OperatorExpr out;
  for (const auto& lam : all_weights(n, r)) out += vpow(lam.at(i)) * projector(lam);
  return out;
}

// --- automorphisms

OperatorExpr rotate_aut(int n, const OperatorExpr& x) {
  OperatorExpr out;
  for (const auto& [w, c] : x.terms()) {
    Word nw;
    for (G g : w) {
      switch (g.kind) {
        case GenKind::R:
        case GenKind::Rinv:
          break;
        case GenKind::Proj: {
          if (static_cast<int>(g.weight.size()) != n) throw std::invalid_argument("rotate_aut: projector size != n");
          std::rotate(g.weight.rbegin(), g.weight.rbegin() + 1, g.weight.rend());
          break;
        }
        default:
          g.index = cyc(g.index + 1, n);
      }
      nw.push_back(g);
    }
    out.add(nw, c);
  }
  return out;
}

OperatorExpr sigma_antiaut(const OperatorExpr& x) {
  OperatorExpr out;
  for (const auto& [w, c] : x.terms()) {
    Word nw(w.rbegin(), w.rend());
    for (G& g : nw) {
      switch (g.kind) {
        case GenKind::R:
        case GenKind::Rinv:
          throw std::invalid_argument("sigma is not defined on words containing R");
        case GenKind::E: g.kind = GenKind::F; break;
        case GenKind::F: g.kind = GenKind::E; break;
        case GenKind::ClassicalE: g.kind = GenKind::ClassicalF; break;
        case GenKind::ClassicalF: g.kind = GenKind::ClassicalE; break;
        default: break;
      }
    }
    out.add(nw, c);
  }
  return out;
}

OperatorExpr commute_projector(const GeneratorSymbol& g, const Weight& lambda) {
  if (g.kind == GenKind::E) {
    if (lambda.at(g.index + 1) == 0) return {};
    return projector(Weight(add_root(lambda.parts(), g.index, 1))) * OperatorExpr(g);
  }
  if (g.kind == GenKind::F) {
    if (lambda.at(g.index) == 0) return {};
    return projector(Weight(add_root(lambda.parts(), g.index, -1))) * OperatorExpr(g);
  }
  throw std::invalid_argument("commute_projector takes E_i or F_i");
}

LaurentPoly cancellation(const Weight& lambda, int i, int c, CancelDirection dir) {
  if (c < 0) throw std::invalid_argument("cancellation: c must be nonnegative");
  LaurentPoly f = quantum_factorial(c);
  if (dir == CancelDirection::FE) {
    if (lambda.at(i) != 0) throw std::invalid_argument("cancellation FE needs lambda_i = 0");
    return f * f * gauss_binomial(lambda.at(i + 1), c);
  }
  if (lambda.at(i + 1) != 0) throw std::invalid_argument("cancellation EF needs lambda_{i+1} = 0");
  return f * f * gauss_binomial(lambda.at(i), c);
}

// --- distinguished monomials

namespace {

bool term_condition(GenKind kind, int i, const Weight& right) {
  if (kind == GenKind::E) return right.at(i) == 0;
  if (kind == GenKind::F) return right.at(i + 1) == 0;
  return true;
}

DistinguishedTerm make_term(int n, GenKind kind, int i, int c, const Weight& right) {
  DistinguishedTerm t;
  t.kind = kind;
  t.index = kind == GenKind::Proj ? 0 : cyc(i, n);
  t.c = c;
  t.right = right;
  if (kind == GenKind::Proj) {
    t.left = right.parts();
    t.nonzero = true;
  } else if (kind == GenKind::E) {
    t.left = right.parts();
    for (int k = 0; k < c; ++k) t.left = add_root(t.left, i, 1);
    t.nonzero = right.at(i + 1) >= c;
  } else {
    t.left = right.parts();
    for (int k = 0; k < c; ++k) t.left = add_root(t.left, i, -1);
    t.nonzero = right.at(i) >= c;
  }
  return t;
}

bool same_letter(int n, const G& a, const G& b) { return a.kind == b.kind && cyc(a.index, n) == cyc(b.index, n); }

std::optional<std::vector<DistinguishedTerm>> strict_parse(int n, const Word& w) {
  std::vector<DistinguishedTerm> terms;
  size_t p = 0;
  while (p < w.size()) {
    if (w[p].kind == GenKind::Proj) {
      terms.push_back(make_term(n, GenKind::Proj, 0, 0, Weight(w[p].weight)));
      ++p;
      continue;
    }
    size_t q = p;
    while (q < w.size() && same_letter(n, w[q], w[p])) ++q;
    if (q == w.size() || w[q].kind != GenKind::Proj) return std::nullopt;
    Weight right(w[q].weight);
    if (!term_condition(w[p].kind, w[p].index, right)) return std::nullopt;
    terms.push_back(make_term(n, w[p].kind, w[p].index, static_cast<int>(q - p), right));
    p = q + 1;
  }
  return terms;
}

// Inserts the projectors a reduction omitted, reading the weight off the
// rightmost projector.
std::optional<Word> restore_projectors(int n, const Word& w) {
  if (w.empty() || w.back().kind != GenKind::Proj) return std::nullopt;
  std::vector<int> mu = w.back().weight;
  Word rev;
  size_t k = w.size();
  while (k > 0) {
    const G& g = w[k - 1];
    if (g.kind == GenKind::Proj) {
      if (g.weight != mu) return std::nullopt;
      rev.push_back(g);
      --k;
      continue;
    }
    if (rev.empty() || rev.back().kind != GenKind::Proj) rev.push_back(G::Proj(Weight(mu)));
    size_t j = k;
    while (j > 0 && same_letter(n, w[j - 1], g)) --j;
    int c = static_cast<int>(k - j);
    if (!term_condition(g.kind, g.index, Weight(mu))) return std::nullopt;
    for (int m = 0; m < c; ++m) {
      rev.push_back(g);
      mu = add_root(mu, g.index, g.kind == GenKind::E ? 1 : -1);
    }
    if (std::any_of(mu.begin(), mu.end(), [](int x) { return x < 0; })) {
      if (j > 0) return std::nullopt;
      // A zero leftmost term; nothing further to restore.
      return Word(rev.rbegin(), rev.rend());
    }
    k = j;
  }
  return Word(rev.rbegin(), rev.rend());
}

bool chained(const std::vector<DistinguishedTerm>& terms) {
  for (size_t k = 0; k + 1 < terms.size(); ++k)
    if (terms[k].right.parts() != terms[k + 1].left) return false;
  return true;
}

}  // namespace

DistinguishedAnalysis distinguished_analyze(int n, const Word& w) {
  for (const auto& g : w)
    if (g.kind != GenKind::E && g.kind != GenKind::F && g.kind != GenKind::Proj)
      throw std::invalid_argument("distinguished_analyze: unexpected symbol " + g.to_string());
  DistinguishedAnalysis out;
  if (auto terms = strict_parse(n, w)) {
    out.parsed = out.strictly_distinguished = true;
    out.terms = std::move(*terms);
  } else if (auto full = restore_projectors(n, w)) {
    auto terms2 = strict_parse(n, *full);
    if (!terms2) return out;
    out.parsed = true;
    out.reduction_of = std::move(*full);
    out.terms = std::move(*terms2);
  } else {
    return out;
  }
  out.nonzero = chained(out.terms) &&
                std::all_of(out.terms.begin(), out.terms.end(), [](const DistinguishedTerm& t) { return t.nonzero; });
  return out;
}

// --- zeta

OperatorExpr zeta(int n, int r, ZetaTarget target, int i, ZetaForm form) {
  need_affine(n, r);
  const OperatorExpr p = projector(Weight::omega(n, r));
  const LaurentPoly v = vpow(1);
  std::vector<G> w;
  switch (target) {
    case ZetaTarget::S:
      if (i < 1 || i >= r) throw std::invalid_argument("zeta(T_s_i) needs 1 <= i < r");
      return (v * chain({G::F(i), G::E(i)}) - one()) * p;
    case ZetaTarget::RhoInv:
      for (int k = n; k > r; --k) w.push_back(G::F(k));
      for (int k = 1; k <= r; ++k) w.push_back(G::F(k));
      return chain(w) * p;
    case ZetaTarget::Rho:
      for (int k = r; k < n; ++k) w.push_back(G::E(k));
      for (int k = r - 1; k >= 1; --k) w.push_back(G::E(k));
      w.push_back(G::E(n));
      return chain(w) * p;
    case ZetaTarget::Sr: {
      for (int k = n; k >= r; --k) w.push_back(G::F(k));
      for (int k = r; k <= n; ++k) w.push_back(G::E(k));
      if (form == ZetaForm::Printed) return p * (chain(w) - scalar(vpow(-1)));
      return p * (v * chain(w) - one());
    }
  }
  return {};
}

// --- surjectivity monomials

namespace {

struct Move {
  GenKind kind;
  int i;
  int c;
};

// Moves are listed in the order they act.
Monomial assemble(const Weight& source, const std::vector<Move>& moves) {
  std::vector<std::vector<int>> before;
  std::vector<int> cur = source.parts();
  for (const auto& m : moves) {
    before.push_back(cur);
    for (int k = 0; k < m.c; ++k) cur = add_root(cur, m.i, m.kind == GenKind::E ? 1 : -1);
  }
  Monomial out{{}, source, Weight(cur)};
  out.word.push_back(G::Proj(out.target));
  for (size_t k = moves.size(); k-- > 0;) {
    for (int m = 0; m < moves[k].c; ++m) out.word.push_back({moves[k].kind, moves[k].i, {}});
    out.word.push_back(G::Proj(Weight(before[k])));
  }
  if (moves.empty()) out.word = {G::Proj(source)};
  return out;
}

void need_positive_first(const Weight& lambda) {
  if (lambda.at(1) == 0) throw std::invalid_argument("needs lambda_1 > 0");
}

}  // namespace

Monomial build_m1(const Weight& lambda) {
  need_positive_first(lambda);
  const int n = lambda.n();
  std::vector<int> xi = lambda.parts();
  std::vector<Move> moves;
  while (true) {
    int found = 0;
    for (int i = 1; i < n && !found; ++i)
      if (xi[i - 1] == 0 && xi[i] > 0) found = i;
    if (!found) break;
    moves.push_back({GenKind::E, found, xi[found]});
    std::swap(xi[found - 1], xi[found]);
  }
  return assemble(lambda, moves);
}

Weight nu_of(const Weight& mu) {
  const int n = mu.n(), r = mu.r();
  bool seen_zero = false;
  for (int p : mu.parts()) {
    if (p == 0) seen_zero = true;
    else if (seen_zero) throw std::invalid_argument("nu_of: zero parts of mu must come last");
  }
  std::vector<int> nu(n, 0);
  int a = 1;
  for (int i = 0; i < r && i < n; ++i) {
    int part = mu.parts()[i];
    if (part > 0) nu[a - 1] = part;
    a += part;
  }
  return Weight(nu);
}

Monomial build_m2(const Weight& mu) {
  const int n = mu.n();
  const Weight nu = nu_of(mu);
  std::vector<int> targets;
  for (int a = 1; a <= n; ++a)
    if (nu.at(a) > 0) targets.push_back(a);
  std::vector<int> xi = mu.parts();
  std::vector<Move> moves;
  while (xi != nu.parts()) {
    int found = 0, block = 0;
    for (int p = 1; p < n && !found; ++p) {
      if (xi[p - 1] == 0) continue;
      if (xi[p] == 0 && p < targets[block]) found = p;
      ++block;
    }
    if (!found) throw std::logic_error("build_m2: no applicable move");
    moves.push_back({GenKind::F, found, xi[found - 1]});
    std::swap(xi[found - 1], xi[found]);
  }
  return assemble(mu, moves);
}

Monomial build_m3(const Weight& nu) {
  const int n = nu.n();
  std::vector<std::vector<Move>> segments;
  for (int p = 1; p <= n; ++p) {
    int m = nu.at(p);
    if (m == 0) continue;
    if (p + m - 1 > n) throw std::invalid_argument("build_m3: segment runs past n");
    for (int k = p + 1; k < p + m; ++k)
      if (nu.at(k) != 0) throw std::invalid_argument("build_m3: nu is not a union of segments (m, 0^(m-1))");
    std::vector<Move> seg;
    for (int k = 0; k + 1 < m; ++k) seg.push_back({GenKind::F, p + k, m - 1 - k});
    segments.push_back(seg);
  }
  // The last segment acts first.
  std::vector<Move> moves;
  for (size_t s = segments.size(); s-- > 0;)
    for (const auto& mv : segments[s]) moves.push_back(mv);
  return assemble(nu, moves);
}

Monomial build_m(const Weight& lambda) {
  need_affine(lambda.n(), lambda.r());
  need_positive_first(lambda);
  Monomial m1 = build_m1(lambda);
  Monomial m2 = build_m2(m1.target);
  Monomial m3 = build_m3(m2.target);
  if (m3.target != Weight::omega(lambda.n(), lambda.r())) throw std::logic_error("build_m: M3 does not end at omega");
  Monomial out{{}, lambda, m3.target};
  for (const Monomial* part : {&m3, &m2, &m1})
    for (const auto& g : part->word) {
      if (!out.word.empty() && g.kind == GenKind::Proj && out.word.back() == g) continue;
      out.word.push_back(g);
    }
  return out;
}

Word strip_projectors(const Word& w) {
  Word out;
  for (const auto& g : w)
    if (g.kind != GenKind::Proj) out.push_back(g);
  return out;
}

MonomialConditions check_m_conditions(const Monomial& m, std::optional<Window> window) {
  const int n = m.source.n();
  const Window win = window.value_or(Window{1, n});
  MonomialConditions out;
  const Word letters = strip_projectors(m.word);
  const OperatorExpr body = OperatorExpr(letters) * projector(m.source);
  const OperatorExpr sandwiched = projector(m.target) * body;
  out.sandwich = true;
  bool any = false;
  for (const auto& b : weight_space_basis(m.source, win)) {
    TensorVector x = TensorVector::basis(b);
    TensorVector y = act(n, body, x);
    if (!y.is_zero()) any = true;
    if (act(n, sandwiched, x) != y) out.sandwich = false;
  }
  DistinguishedAnalysis da = distinguished_analyze(n, m.word);
  out.nonzero = any && da.parsed && da.nonzero;

  out.avoids_forbidden = true;
  int f1 = 0;
  std::vector<size_t> f1_pos, en1_pos;
  for (size_t k = 0; k < letters.size(); ++k) {
    const G& g = letters[k];
    int i = cyc(g.index, n);
    if (g.kind == GenKind::E && (i == n || i == 1)) out.avoids_forbidden = false;
    if (g.kind == GenKind::F && (i == n || i == n - 1)) out.avoids_forbidden = false;
    if (g.kind == GenKind::F && i == 1) {
      ++f1;
      f1_pos.push_back(k);
    }
    if (g.kind == GenKind::E && i == n - 1) en1_pos.push_back(k);
  }
  auto contiguous = [](const std::vector<size_t>& pos) { return pos.empty() || pos.back() - pos.front() + 1 == pos.size(); };
  out.consecutive = contiguous(f1_pos) && contiguous(en1_pos);
  out.f1_bound = f1 <= m.source.at(1) - 1;
  return out;
}

EnFactor factor_en(const Weight& lambda, std::optional<int> max_radius) {
  const int n = lambda.n(), r = lambda.r();
  need_affine(n, r);
  need_positive_first(lambda);
  EnFactor out;
  out.m = build_m(lambda);
  const Word letters = strip_projectors(out.m.word);
  const OperatorExpr p_lam = projector(lambda);
  const OperatorExpr lhs = OperatorExpr(G::E(n)) * p_lam;
  const OperatorExpr body = OperatorExpr(letters);
  const OperatorExpr rhs =
      sigma_antiaut(body) * OperatorExpr(G::E(n)) * projector(Weight::omega(n, r)) * body * p_lam;
  int radius = moving_length(rhs);
  if (max_radius) radius = std::min(radius, *max_radius);
  out.window = default_window(n, radius);
  const auto inputs = weight_space_basis(lambda, out.window);

  bool have_z = false;
  for (const auto& b : inputs) {
    TensorVector x = TensorVector::basis(b);
    TensorVector a = act(n, lhs, x);
    TensorVector c = act(n, rhs, x);
    if (!have_z) {
      if (a.is_zero()) {
        if (!c.is_zero()) throw std::logic_error("factor_en: right side nonzero where E_n 1_lambda vanishes");
        continue;
      }
      const auto& [t, ca] = *a.terms().begin();
      LaurentPoly cc = c.coeff(t);
      if (cc.is_zero()) throw std::logic_error("factor_en: sides are not proportional at " + b.to_string());
      if (auto qt = ca.divide_exact(cc)) {
        out.z_num = *qt;
        out.z_den = 1;
      } else if (auto qt2 = cc.divide_exact(ca)) {
        out.z_num = 1;
        out.z_den = *qt2;
      } else {
        out.z_num = ca;
        out.z_den = cc;
      }
      have_z = true;
    }
    if (out.z_den * a != out.z_num * c)
      throw std::logic_error("factor_en: sides are not proportional at " + b.to_string());
  }
  if (!have_z) throw std::logic_error("factor_en: E_n 1_lambda vanishes on the window");
  out.verified = true;
  return out;
}

}  // namespace aschur
