#include "aschur/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace aschur {

namespace {

int residue(int t, int n) { return ((t - 1) % n + n) % n + 1; }

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s;
}

}  // namespace

std::string TensorBasisVector::to_string() const { return "e[" + join_ints(idx) + "]"; }

TensorVector TensorVector::basis(const TensorBasisVector& b, const LaurentPoly& c) {
  TensorVector x;
  x.add(b, c);
  return x;
}

LaurentPoly TensorVector::coeff(const TensorBasisVector& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TensorVector::add(const TensorBasisVector& b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [b, c] : o.terms_) add(b, -c);
  return *this;
}

TensorVector operator*(const LaurentPoly& c, const TensorVector& x) {
  TensorVector out;
  if (c.is_zero()) return out;
  for (const auto& [b, y] : x.terms_) out.terms_.emplace(b, c * y);
  return out;
}

std::string TensorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ")*" + b.to_string();
  }
  return s;
}

bool GeneratorSymbol::is_classical() const {
  return kind == GenKind::ClassicalE || kind == GenKind::ClassicalF || kind == GenKind::ClassicalH;
}

std::string GeneratorSymbol::to_string() const {
  std::string i = std::to_string(index);
  switch (kind) {
    case GenKind::E: return "E" + i;
    case GenKind::F: return "F" + i;
    case GenKind::K: return "K" + i;
    case GenKind::Kinv: return "K" + i + "^-1";
    case GenKind::R: return "R";
    case GenKind::Rinv: return "R^-1";
    case GenKind::Proj: return "P(" + join_ints(weight) + ")";
    case GenKind::ClassicalE: return "e" + i;
    case GenKind::ClassicalF: return "f" + i;
    case GenKind::ClassicalH: return "H" + i;
  }
  return "?";
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + w[k].to_string();
  return s;
}

Word parse_word(const std::string& text) {
  Word out;
  size_t p = 0;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("parse_word: " + why + " at position " + std::to_string(p) + " in '" + text + "'");
  };
  auto read_int = [&](bool allow_sign) {
    size_t q = p;
    if (allow_sign && q < text.size() && text[q] == '-') ++q;
    size_t digits = q;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
    if (q == digits) throw bad("expected a number");
    int x = std::stoi(text.substr(p, q - p));
    p = q;
    return x;
  };
  while (p < text.size()) {
    char c = text[p];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    if (c == '1' && (p + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[p + 1])))) {
      ++p;
      continue;
    }
    GeneratorSymbol g;
    ++p;
    switch (c) {
      case 'E': g = GeneratorSymbol::E(read_int(false)); break;
      case 'F': g = GeneratorSymbol::F(read_int(false)); break;
      case 'K': g = GeneratorSymbol::K(read_int(false)); break;
      case 'e': g = GeneratorSymbol::e(read_int(false)); break;
      case 'f': g = GeneratorSymbol::f(read_int(false)); break;
      case 'H': g = GeneratorSymbol::H(read_int(false)); break;
      case 'R': g = GeneratorSymbol::R(); break;
      case 'P': {
        size_t close = text.find(')', p);
        if (p >= text.size() || text[p] != '(' || close == std::string::npos) throw bad("expected P(...)");
        g = GeneratorSymbol::Proj(Weight::parse(text.substr(p + 1, close - p - 1)));
        p = close + 1;
        break;
      }
      default:
        --p;
        throw bad(std::string("unexpected '") + c + "'");
    }
    int k = 1;
    if (p < text.size() && text[p] == '^') {
      ++p;
      k = read_int(true);
    }
    if (k == -1 && (g.kind == GenKind::K || g.kind == GenKind::R)) {
      g.kind = g.kind == GenKind::K ? GenKind::Kinv : GenKind::Rinv;
      k = 1;
    }
    if (k < 1) throw bad("unsupported exponent");
    for (int t = 0; t < k; ++t) out.push_back(g);
  }
  return out;
}

OperatorExpr::OperatorExpr(const Word& w, const LaurentPoly& c) { add(w, c); }
OperatorExpr::OperatorExpr(const GeneratorSymbol& g) { add(Word{g}, 1); }

size_t OperatorExpr::max_word_length() const {
  size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

void OperatorExpr::add(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

OperatorExpr operator*(const LaurentPoly& c, const OperatorExpr& x) {
  OperatorExpr out;
  if (c.is_zero()) return out;
  for (const auto& [w, y] : x.terms_) out.terms_.emplace(w, c * y);
  return out;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ")*[" + word_to_string(w) + "]";
  }
  return s;
}

OperatorExpr power(const GeneratorSymbol& g, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  return OperatorExpr(Word(k, g));
}

OperatorExpr chain(const std::vector<GeneratorSymbol>& gens) { return OperatorExpr(Word(gens)); }

Weight weight_of(int n, const TensorBasisVector& b) {
  std::vector<int> parts(n, 0);
  for (int t : b.idx) ++parts[residue(t, n) - 1];
  return Weight(parts);
}

TensorBasisVector shift(const TensorBasisVector& b, int k) {
  TensorBasisVector out = b;
  for (int& t : out.idx) t += k;
  return out;
}

namespace {

int count_residue(const std::vector<int>& idx, size_t from, size_t to, int i, int n) {
  int c = 0;
  for (size_t u = from; u < to; ++u)
    if (residue(idx[u], n) == i) ++c;
  return c;
}

TensorVector act_quantum(int n, const GeneratorSymbol& g, const TensorBasisVector& b) {
  TensorVector out;
  const auto& idx = b.idx;
  const size_t r = idx.size();
  const int i = g.kind == GenKind::R || g.kind == GenKind::Rinv || g.kind == GenKind::Proj ? 0 : residue(g.index, n);
  const int i1 = residue(i + 1, n);
  switch (g.kind) {
    case GenKind::K:
      out.add(b, LaurentPoly::monomial(count_residue(idx, 0, r, i, n)));
      break;
    case GenKind::Kinv:
      out.add(b, LaurentPoly::monomial(-count_residue(idx, 0, r, i, n)));
      break;
    case GenKind::R:
      out.add(shift(b, 1), 1);
      break;
    case GenKind::Rinv:
      out.add(shift(b, -1), 1);
      break;
    case GenKind::Proj:
      if (weight_of(n, b).parts() == g.weight) out.add(b, 1);
      break;
    case GenKind::E:
      // E_i e_{t+1} = e_t for t = i; K_i K_{i+1}^{-1} on the later factors.
      for (size_t j = 0; j < r; ++j) {
        if (residue(idx[j] - 1, n) != i) continue;
        int twist = count_residue(idx, j + 1, r, i, n) - count_residue(idx, j + 1, r, i1, n);
        TensorBasisVector nb = b;
        --nb.idx[j];
        out.add(nb, LaurentPoly::monomial(twist));
      }
      break;
    case GenKind::F:
      // F_i e_t = e_{t+1} for t = i; K_i^{-1} K_{i+1} on the earlier factors.
      for (size_t j = 0; j < r; ++j) {
        if (residue(idx[j], n) != i) continue;
        int twist = count_residue(idx, 0, j, i1, n) - count_residue(idx, 0, j, i, n);
        TensorBasisVector nb = b;
        ++nb.idx[j];
        out.add(nb, LaurentPoly::monomial(twist));
      }
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

TensorVector classical_act(int n, const GeneratorSymbol& g, const TensorBasisVector& b) {
  if (!g.is_classical()) throw std::invalid_argument("classical_act: " + g.to_string() + " is not classical");
  TensorVector out;
  const int i = residue(g.index, n);
  const auto& idx = b.idx;
  switch (g.kind) {
    case GenKind::ClassicalH:
      out.add(b, LaurentPoly(count_residue(idx, 0, idx.size(), i, n)));
      break;
    case GenKind::ClassicalE:
      for (size_t j = 0; j < idx.size(); ++j)
        if (residue(idx[j] - 1, n) == i) {
          TensorBasisVector nb = b;
          --nb.idx[j];
          out.add(nb, 1);
        }
      break;
    case GenKind::ClassicalF:
      for (size_t j = 0; j < idx.size(); ++j)
        if (residue(idx[j], n) == i) {
          TensorBasisVector nb = b;
          ++nb.idx[j];
          out.add(nb, 1);
        }
      break;
    default:
      break;
  }
  return out;
}

TensorVector act_generator(int n, const GeneratorSymbol& g, const TensorBasisVector& b) {
  if (n < 1) throw std::invalid_argument("act_generator: n must be positive");
  if (g.kind == GenKind::Proj && static_cast<int>(g.weight.size()) != n)
    throw std::invalid_argument("projector weight has the wrong number of parts");
  if (g.is_classical()) return classical_act(n, g, b);
  return act_quantum(n, g, b);
}

TensorVector act_generator(int n, const GeneratorSymbol& g, const TensorVector& x) {
  TensorVector out;
  for (const auto& [b, c] : x.terms()) {
    TensorVector y = act_generator(n, g, b);
    out += c * y;
  }
  return out;
}

TensorVector act_word(int n, const Word& w, const TensorVector& x) {
  TensorVector cur = x;
  for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = act_generator(n, *it, cur);
  return cur;
}

TensorVector act(int n, const OperatorExpr& e, const TensorVector& x) {
  TensorVector out;
  for (const auto& [w, c] : e.terms()) out += c * act_word(n, w, x);
  return out;
}

std::string Window::to_string() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

Window default_window(int n, int radius) { return {1 - radius, n + radius}; }

std::vector<TensorBasisVector> window_basis(int r, const Window& w) {
  std::vector<TensorBasisVector> out;
  if (w.hi < w.lo) return out;
  TensorBasisVector cur{std::vector<int>(r, w.lo)};
  while (true) {
    out.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur.idx[k] == w.hi) cur.idx[k--] = w.lo;
    if (k < 0) break;
    ++cur.idx[k];
  }
  return out;
}

namespace {

void fill_weight(const Window& w, int n, std::vector<int>& remaining, TensorBasisVector& cur, size_t pos,
                 std::vector<TensorBasisVector>& out) {
  if (pos == cur.idx.size()) {
    out.push_back(cur);
    return;
  }
  for (int t = w.lo; t <= w.hi; ++t) {
    int k = residue(t, n) - 1;
    if (remaining[k] == 0) continue;
    --remaining[k];
    cur.idx[pos] = t;
    fill_weight(w, n, remaining, cur, pos + 1, out);
    ++remaining[k];
  }
}

}  // namespace

std::vector<TensorBasisVector> weight_space_basis(const Weight& lambda, const Window& w) {
  std::vector<TensorBasisVector> out;
  if (w.hi < w.lo) return out;
  std::vector<int> remaining = lambda.parts();
  TensorBasisVector cur{std::vector<int>(lambda.r(), 0)};
  fill_weight(w, lambda.n(), remaining, cur, 0, out);
  return out;
}

OperatorExpr tau(int n, int r, TauTarget target, TauVariant variant, int i) {
  using G = GeneratorSymbol;
  if (n <= r) throw std::invalid_argument("tau needs n > r");
  const OperatorExpr proj = G::Proj(Weight::omega(n, r));
  const LaurentPoly v = LaurentPoly::v();
  switch (target) {
    case TauTarget::S: {
      if (i < 1 || i >= r) throw std::invalid_argument("tau(T_s_i) needs 1 <= i < r");
      return (v * chain({G::F(i), G::E(i)}) - OperatorExpr::identity()) * proj;
    }
    case TauTarget::RhoInv: {
      std::vector<G> w;
      for (int k = n; k > r; --k) w.push_back(G::F(k));
      if (variant == TauVariant::WithR) {
        w.push_back(G::R());
      } else {
        for (int k = 1; k <= r; ++k) w.push_back(G::F(k));
      }
      return chain(w) * proj;
    }
    case TauTarget::Rho: {
      std::vector<G> w;
      for (int k = r; k < n; ++k) w.push_back(G::E(k));
      if (variant == TauVariant::WithR) {
        w.push_back(G::Rinv());
      } else {
        for (int k = r - 1; k >= 1; --k) w.push_back(G::E(k));
        w.push_back(G::E(n));
      }
      return chain(w) * proj;
    }
    case TauTarget::Sr: {
      if (r < 2) throw std::invalid_argument("tau(T_s_r) needs r >= 2");
      return tau(n, r, TauTarget::Rho, variant) * tau(n, r, TauTarget::S, variant, 1) *
             tau(n, r, TauTarget::RhoInv, variant);
    }
  }
  return {};
}

}  // namespace aschur
