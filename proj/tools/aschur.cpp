// Command-line front end. Output is one record per line: "key=value" pairs in
// text mode, JSON objects with a "schema" field in json mode.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aschur/latmat.hpp"
#include "aschur/present.hpp"
#include "aschur/schur.hpp"

using namespace aschur;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Record {
 public:
  explicit Record(std::string schema) : json_{{"schema", "aschur." + schema + "/1"}} {}

  Record& add(const std::string& key, Json value, std::string text) {
    json_[key] = std::move(value);
    text_.push_back({key, std::move(text)});
    return *this;
  }
  Record& add(const std::string& key, const std::string& s) { return add(key, s, s); }
  Record& add(const std::string& key, const char* s) { return add(key, std::string(s)); }
  Record& add(const std::string& key, long x) { return add(key, x, std::to_string(x)); }
  Record& add(const std::string& key, int x) { return add(key, static_cast<long>(x)); }
  Record& add(const std::string& key, size_t x) { return add(key, static_cast<long>(x)); }
  Record& add(const std::string& key, bool b) { return add(key, b, b ? "true" : "false"); }

  void print(std::ostream& os, bool json) const {
    if (json) {
      os << json_.dump() << "\n";
      return;
    }
    std::string line;
    for (const auto& [k, t] : text_) {
      if (t.find('\n') != std::string::npos) {
        if (!line.empty()) os << line << "\n";
        os << k << ":\n" << t << "\n";
        line.clear();
        continue;
      }
      line += (line.empty() ? "" : " ") + k + "=" + t;
    }
    if (!line.empty()) os << line << "\n";
  }

 private:
  Json json_;
  std::vector<std::pair<std::string, std::string>> text_;
};

// --- value rendering

std::string ints_text(const std::vector<int>& xs, const char* open = "(", const char* close = ")") {
  std::string s = open;
  for (size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s + close;
}

void add_weight(Record& rec, const std::string& key, const Weight& w) {
  rec.add(key, Json(w.parts()), w.to_string());
}

void add_perm(Record& rec, const std::string& key, const AffinePerm& w) {
  rec.add(key, Json{{"z", w.z()}, {"window", w.window()}}, w.to_string());
}

void add_poly(Record& rec, const std::string& key, const LaurentPoly& p) { rec.add(key, p.to_string()); }

void add_hecke(Record& rec, const std::string& key, const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [w, c] : h.terms()) terms.push_back({{"w", w.to_string()}, {"coeff", c.to_string()}});
  rec.add(key, terms, h.is_zero() ? "0" : h.to_string());
}

void add_schur(Record& rec, const std::string& key, const SchurElement& x) {
  Json terms = Json::array();
  for (const auto& [idx, c] : x.terms())
    terms.push_back({{"lambda", idx.lambda.parts()}, {"d", idx.d.to_string()}, {"mu", idx.mu.parts()},
                     {"coeff", c.to_string()}});
  rec.add(key, terms, x.is_zero() ? "0" : x.to_string());
}

void add_tensor(Record& rec, const std::string& key, const TensorVector& x) {
  Json terms = Json::array();
  for (const auto& [b, c] : x.terms()) terms.push_back({{"basis", b.idx}, {"coeff", c.to_string()}});
  rec.add(key, terms, x.is_zero() ? "0" : x.to_string());
}

void add_word(Record& rec, const std::string& key, const Word& w) { rec.add(key, word_to_string(w)); }

void add_matrix(Record& rec, const PeriodicMatrix& a) {
  Json entries = Json::array();
  for (const auto& [ij, x] : a.entries()) entries.push_back({ij.first, ij.second, x});
  auto [lo, hi] = a.band();
  rec.add("matrix", Json{{"n", a.n()}, {"r", a.r()}, {"band", {lo, hi}}, {"entries", entries}}, a.to_string());
}

// --- input parsing

std::vector<int> parse_ints(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' && c != ']') s += c;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

Weight parse_weight(const std::string& text, const std::string& flag, int n, int r) {
  std::vector<int> parts = parse_ints(text, flag);
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw UsageError(flag + ": entries must be nonnegative");
  Weight w(parts);
  if (n > 0 && w.n() != n) throw UsageError(flag + ": expected " + std::to_string(n) + " entries");
  if (r >= 0 && w.r() != r) throw UsageError(flag + ": entries must sum to r = " + std::to_string(r));
  return w;
}

AffinePerm parse_perm(int r, const std::string& text, const std::string& flag) {
  try {
    return AffinePerm::parse(r, text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

ParabolicIndex parse_parabolic(int r, const std::string& text, const std::string& flag) {
  std::vector<int> gens = text.empty() ? std::vector<int>{} : parse_ints(text, flag);
  try {
    return ParabolicIndex(r, gens);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

PeriodicMatrix parse_matrix(int n, const std::string& text) {
  PeriodicMatrix a(n);
  std::istringstream is(text);
  std::string cell;
  while (std::getline(is, cell, ';')) {
    if (cell.find_first_not_of(" ") == std::string::npos) continue;
    auto v = parse_ints(cell, "--entries");
    if (v.size() != 3) throw UsageError("--entries: each cell is i,j,a");
    if (v[0] < 1 || v[0] > n) throw UsageError("--entries: row index must lie in 1..n");
    if (v[2] < 0) throw UsageError("--entries: entries are nonnegative");
    a.set(v[0], v[1], a.at(v[0], v[1]) + v[2]);
  }
  return a;
}

void require_affine(int n, int r) {
  if (r < 1) throw UsageError("--r: must be positive");
  if (n <= r)
    throw UsageError("--n: must exceed --r (got n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                     "); the affine q-Schur presentation is stated for n > r");
}

int max_length_env() {
  const char* s = std::getenv("ASCHUR_MAX_LENGTH");
  if (!s || !*s) return kDefaultMaxLength;
  try {
    int v = std::stoi(s);
    if (v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("ASCHUR_MAX_LENGTH: expected a nonnegative integer, got '") + s + "'");
  }
}

// "Q5 i=2 j=10" after "Q5 i=2 j=9".
bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      long x = std::stol(a.substr(i, i2 - i)), y = std::stol(b.substr(j, j2 - j));
      if (x != y) return x < y;
      i = i2, j = j2;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i, ++j;
  }
  return a.size() - i < b.size() - j;
}

Record monomial_record(const std::string& schema, const Monomial& m, const std::string& target_key = "target") {
  Record rec(schema);
  add_weight(rec, "source", m.source);
  add_weight(rec, target_key, m.target);
  add_word(rec, "word", m.word);
  return rec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine q-Schur algebra toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  int n = 0, r = 0, t = 0;
  std::optional<int> radius;
  std::string a_text, b_text, images, pi_text, pi2_text, side = "left", lambda_text, mu_text, nu_text, d_text,
                                                     word_text, vector_text, window_text, suite_name, entries;
  bool v_one = false;

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Extended affine Weyl group");
  weyl->require_subcommand(1);
  auto* w_compose = weyl->add_subcommand("compose", "a then b");
  w_compose->add_option("--r", r)->required();
  w_compose->add_option("--a", a_text)->required();
  w_compose->add_option("--b", b_text)->required();
  auto* w_length = weyl->add_subcommand("length", "Coxeter length");
  w_length->add_option("--r", r)->required();
  w_length->add_option("--images,--w", images)->required();
  auto* w_reduced = weyl->add_subcommand("reduced", "Reduced word");
  w_reduced->add_option("--r", r)->required();
  w_reduced->add_option("--images,--w", images)->required();
  auto* w_coset = weyl->add_subcommand("coset", "Parabolic coset decomposition");
  w_coset->add_option("--r", r)->required();
  w_coset->add_option("--images,--w", images)->required();
  w_coset->add_option("--pi", pi_text, "generators, e.g. 1,2")->required();
  w_coset->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  auto* w_mincoset = weyl->add_subcommand("mincoset", "Minimal double coset representative");
  w_mincoset->add_option("--r", r)->required();
  w_mincoset->add_option("--images,--w", images)->required();
  w_mincoset->add_option("--pi1", pi_text)->required();
  w_mincoset->add_option("--pi2", pi2_text)->required();
  auto* w_enum = weyl->add_subcommand("enumerate", "Elements of W up to a length (capped by ASCHUR_MAX_LENGTH)");
  w_enum->add_option("--r", r)->required();
  w_enum->add_option("--length", t)->required();

  // hecke
  auto* hecke = app.add_subcommand("hecke", "Extended affine Hecke algebra");
  hecke->require_subcommand(1);
  auto* h_mul = hecke->add_subcommand("mul", "T_a T_b");
  h_mul->add_option("--r", r)->required();
  h_mul->add_option("--a", a_text)->required();
  h_mul->add_option("--b", b_text)->required();
  auto* h_x = hecke->add_subcommand("xlambda", "x_{lambda + t}");
  h_x->add_option("--lambda", lambda_text)->required();
  h_x->add_option("--t", t);

  // schur
  auto* schur = app.add_subcommand("schur", "Affine q-Schur algebra, phi basis");
  schur->require_subcommand(1);
  auto* s_phi = schur->add_subcommand("phi", "phi^d_{lambda,mu}(x_mu) in H");
  auto* s_mul = schur->add_subcommand("mul", "Product of two basis elements, b applied first");
  auto* s_embed = schur->add_subcommand("embed", "T_w -> phi^w_{omega,omega}");
  for (auto* s : {s_phi, s_mul, s_embed}) {
    s->add_option("--n", n)->required();
    s->add_option("--r", r)->required();
  }
  s_phi->add_option("--lambda", lambda_text)->required();
  s_phi->add_option("--mu", mu_text)->required();
  s_phi->add_option("--d", d_text)->required();
  s_mul->add_option("--a", a_text, "lambda|d|mu")->required();
  s_mul->add_option("--b", b_text, "lambda|d|mu")->required();
  s_embed->add_option("--images,--w", images)->required();

  // tensor
  auto* tensor = app.add_subcommand("tensor", "Tensor space action");
  tensor->require_subcommand(1);
  auto* t_act = tensor->add_subcommand("act", "Apply a word to a basis tensor");
  t_act->add_option("--n", n)->required();
  t_act->add_option("--word", word_text)->required();
  t_act->add_option("--vector", vector_text, "indices, e.g. 1,2")->required();
  t_act->add_flag("--v-one", v_one, "classical action (v = 1)");
  auto* t_ws = tensor->add_subcommand("weightspace", "Basis of a weight space on a window");
  t_ws->add_option("--n", n)->required();
  t_ws->add_option("--lambda", lambda_text)->required();
  t_ws->add_option("--window", window_text, "lo,hi (default 1,n)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a relation suite on tensor space");
  verify->add_option("--suite", suite_name)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--r", r)->required();
  verify->add_option("--window-radius", radius, "cap on the window radius");

  // monomial
  auto* mono = app.add_subcommand("monomial", "Surjectivity monomials");
  mono->require_subcommand(1);
  auto* m_m1 = mono->add_subcommand("m1", "");
  auto* m_m2 = mono->add_subcommand("m2", "");
  auto* m_m3 = mono->add_subcommand("m3", "");
  auto* m_m = mono->add_subcommand("m", "");
  auto* m_fe = mono->add_subcommand("factor-en", "E_n 1_lambda = z sigma(M) E_n 1_w M");
  for (auto* s : {m_m1, m_m2, m_m3, m_m, m_fe}) {
    s->add_option("--n", n)->required();
    s->add_option("--r", r)->required();
  }
  for (auto* s : {m_m1, m_m, m_fe}) s->add_option("--lambda", lambda_text)->required();
  m_m2->add_option("--mu", mu_text)->required();
  m_m3->add_option("--nu", nu_text)->required();
  m_fe->add_option("--window-radius", radius);

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Periodic matrices");
  matrix->require_subcommand(1);
  auto* x_from = matrix->add_subcommand("from-coset", "");
  x_from->add_option("--n", n)->required();
  x_from->add_option("--r", r)->required();
  x_from->add_option("--lambda", lambda_text)->required();
  x_from->add_option("--mu", mu_text)->required();
  x_from->add_option("--d", d_text)->required();
  auto* x_to = matrix->add_subcommand("to-coset", "");
  auto* x_d = matrix->add_subcommand("dstat", "");
  auto* x_ap = matrix->add_subcommand("aperiodic", "");
  for (auto* s : {x_to, x_d, x_ap}) {
    s->add_option("--n", n)->required();
    s->add_option("--entries", entries, "i,j,a;i,j,a;... for rows 1..n")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool json = format == "json";
  std::vector<Record> out;
  int status = 0;
  try {
    if (w_compose->parsed()) {
      AffinePerm a = parse_perm(r, a_text, "--a"), b = parse_perm(r, b_text, "--b");
      Record rec("weyl.compose");
      add_perm(rec, "a", a);
      add_perm(rec, "b", b);
      add_perm(rec, "result", compose(a, b));
      out.push_back(rec);
    } else if (w_length->parsed()) {
      AffinePerm w = parse_perm(r, images, "--images");
      Record rec("weyl.length");
      add_perm(rec, "w", w);
      rec.add("length", length(w));
      out.push_back(rec);
    } else if (w_reduced->parsed()) {
      AffinePerm w = parse_perm(r, images, "--images");
      Record rec("weyl.reduced");
      add_perm(rec, "w", w);
      rec.add("z", w.z());
      auto word = reduced_word(w);
      rec.add("word", Json(word), ints_text(word, "[", "]"));
      out.push_back(rec);
    } else if (w_coset->parsed()) {
      AffinePerm w = parse_perm(r, images, "--images");
      ParabolicIndex pi = parse_parabolic(r, pi_text, "--pi");
      auto dec = coset_decompose(w, pi, side == "left" ? CosetSide::Left : CosetSide::Right);
      Record rec("weyl.coset");
      add_perm(rec, "w", w);
      rec.add("side", side);
      add_perm(rec, "parabolic", dec.parabolic);
      add_perm(rec, "distinguished", dec.distinguished);
      out.push_back(rec);
    } else if (w_mincoset->parsed()) {
      AffinePerm w = parse_perm(r, images, "--images");
      AffinePerm d =
          double_coset_min(w, parse_parabolic(r, pi_text, "--pi1"), parse_parabolic(r, pi2_text, "--pi2"));
      Record rec("weyl.mincoset");
      add_perm(rec, "w", w);
      add_perm(rec, "min", d);
      rec.add("length", length(d));
      out.push_back(rec);
    } else if (w_enum->parsed()) {
      if (r < 1) throw UsageError("--r: must be positive");
      int cap = max_length_env();
      if (t > cap)
        throw UsageError("--length: " + std::to_string(t) + " exceeds ASCHUR_MAX_LENGTH = " + std::to_string(cap));
      auto elems = enumerate_up_to_length(r, t, cap);
      Record rec("weyl.enumerate");
      rec.add("r", r).add("max_length", t).add("count", elems.size());
      out.push_back(rec);
      for (const auto& w : elems) {
        Record e("weyl.element");
        add_perm(e, "w", w);
        e.add("length", length(w));
        out.push_back(e);
      }
    } else if (h_mul->parsed()) {
      AffinePerm a = parse_perm(r, a_text, "--a"), b = parse_perm(r, b_text, "--b");
      Record rec("hecke.mul");
      add_perm(rec, "a", a);
      add_perm(rec, "b", b);
      add_hecke(rec, "result", t_element(a) * t_element(b));
      out.push_back(rec);
    } else if (h_x->parsed()) {
      Weight lam = parse_weight(lambda_text, "--lambda", 0, -1);
      Record rec("hecke.xlambda");
      add_weight(rec, "lambda", lam);
      rec.add("t", t);
      add_hecke(rec, "result", x_lambda(lam, t));
      out.push_back(rec);
    } else if (s_phi->parsed() || s_mul->parsed() || s_embed->parsed()) {
      require_affine(n, r);
      auto index = [&](const std::string& text, const std::string& flag) {
        auto bar1 = text.find('|'), bar2 = text.rfind('|');
        if (bar1 == std::string::npos || bar1 == bar2) throw UsageError(flag + ": expected lambda|d|mu");
        Weight lam = parse_weight(text.substr(0, bar1), flag, n, r);
        AffinePerm d = parse_perm(r, text.substr(bar1 + 1, bar2 - bar1 - 1), flag);
        Weight mu = parse_weight(text.substr(bar2 + 1), flag, n, r);
        if (!is_double_coset_min(lam, mu, d)) throw UsageError(flag + ": d is not minimal in its double coset");
        return std::tuple{lam, d, mu};
      };
      if (s_phi->parsed()) {
        auto [lam, d, mu] = index(lambda_text + "|" + d_text + "|" + mu_text, "--lambda/--d/--mu");
        Record rec("schur.phi");
        add_weight(rec, "lambda", lam);
        add_perm(rec, "d", d);
        add_weight(rec, "mu", mu);
        add_hecke(rec, "value", phi_value({lam, mu, d}));
        out.push_back(rec);
      } else if (s_mul->parsed()) {
        auto [l1, d1, m1] = index(a_text, "--a");
        auto [l2, d2, m2] = index(b_text, "--b");
        Record rec("schur.mul");
        rec.add("a", a_text).add("b", b_text);
        add_schur(rec, "result", phi(l1, m1, d1) * phi(l2, m2, d2));
        out.push_back(rec);
      } else {
        AffinePerm w = parse_perm(r, images, "--images");
        Record rec("schur.embed");
        add_perm(rec, "w", w);
        add_schur(rec, "result", hecke_embed(t_element(w), n));
        out.push_back(rec);
      }
    } else if (t_act->parsed()) {
      if (n < 1) throw UsageError("--n: must be positive");
      Word w;
      try {
        w = parse_word(word_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--word: ") + e.what());
      }
      if (v_one)
        for (auto& g : w) {
          if (g.kind == GenKind::E) g.kind = GenKind::ClassicalE;
          else if (g.kind == GenKind::F) g.kind = GenKind::ClassicalF;
          else if (!g.is_classical()) throw UsageError("--v-one: only E, F, e, f, H letters have a classical action");
        }
      auto idx = parse_ints(vector_text, "--vector");
      if (idx.empty()) throw UsageError("--vector: needs at least one index");
      TensorBasisVector b{idx};
      Record rec("tensor.act");
      rec.add("n", n);
      add_word(rec, "word", w);
      rec.add("vector", b.to_string());
      rec.add("v_one", v_one);
      add_tensor(rec, "result", act_word(n, w, TensorVector::basis(b)));
      out.push_back(rec);
    } else if (t_ws->parsed()) {
      if (n < 1) throw UsageError("--n: must be positive");
      Weight lam = parse_weight(lambda_text, "--lambda", n, -1);
      Window win{1, n};
      if (!window_text.empty()) {
        auto lh = parse_ints(window_text, "--window");
        if (lh.size() != 2 || lh[0] > lh[1]) throw UsageError("--window: expected lo,hi with lo <= hi");
        win = {lh[0], lh[1]};
      }
      auto basis = weight_space_basis(lam, win);
      Record rec("tensor.weightspace");
      add_weight(rec, "lambda", lam);
      rec.add("window", win.to_string());
      rec.add("dimension", basis.size());
      Json list = Json::array();
      std::string text;
      for (const auto& b : basis) {
        list.push_back(b.idx);
        text += (text.empty() ? "" : " ") + b.to_string();
      }
      rec.add("basis", list, text.empty() ? "none" : text);
      out.push_back(rec);
    } else if (verify->parsed()) {
      const auto names = suite_names();
      bool known = std::find(names.begin(), names.end(), suite_name) != names.end();
      if (!known && suite_name != "negative-control") {
        std::string all;
        for (const auto& s : names) all += " " + s;
        throw UsageError("--suite: unknown suite '" + suite_name + "'; choose from" + all + " negative-control");
      }
      if (suite_name != "finite-schur") require_affine(n, r);
      std::vector<RelationResult> results;
      if (suite_name == "negative-control") {
        RelationInstance inst = corrupted_q15(n, r);
        Window w = window_for(n, inst, radius);
        IdentityReport rep = verify_identity(n, r, inst, w);
        RelationResult res{suite_name, inst.name, w.to_string(), rep.inputs, rep.pass, ""};
        if (rep.counterexample) res.counterexample = rep.counterexample->to_string();
        results.push_back(res);
      } else {
        results = run_suite(suite_name, n, r, radius);
      }
      std::stable_sort(results.begin(), results.end(),
                       [](const RelationResult& a, const RelationResult& b) { return natural_less(a.name, b.name); });
      size_t failed = 0;
      for (const auto& res : results) {
        Record rec("verify.relation");
        rec.add("suite", res.suite).add("relation", res.name).add("n", n).add("r", r);
        rec.add("window", res.window).add("inputs", res.inputs).add("pass", res.pass);
        if (!res.pass) {
          ++failed;
          rec.add("counterexample", res.counterexample);
        }
        out.push_back(rec);
      }
      Record sum("verify.summary");
      sum.add("suite", suite_name).add("n", n).add("r", r);
      sum.add("relations", results.size()).add("passed", results.size() - failed).add("failed", failed);
      out.push_back(sum);
      status = failed ? 1 : 0;
    } else if (m_m1->parsed()) {
      require_affine(n, r);
      Monomial m = build_m1(parse_weight(lambda_text, "--lambda", n, r));
      out.push_back(monomial_record("monomial.m1", m, "mu"));
    } else if (m_m2->parsed()) {
      require_affine(n, r);
      Monomial m = build_m2(parse_weight(mu_text, "--mu", n, r));
      out.push_back(monomial_record("monomial.m2", m, "nu"));
    } else if (m_m3->parsed()) {
      require_affine(n, r);
      out.push_back(monomial_record("monomial.m3", build_m3(parse_weight(nu_text, "--nu", n, r))));
    } else if (m_m->parsed()) {
      require_affine(n, r);
      Monomial m = build_m(parse_weight(lambda_text, "--lambda", n, r));
      MonomialConditions c = check_m_conditions(m);
      Record rec = monomial_record("monomial.m", m);
      rec.add("nonzero", c.nonzero).add("sandwich", c.sandwich).add("avoids_forbidden", c.avoids_forbidden);
      rec.add("consecutive", c.consecutive).add("f1_bound", c.f1_bound);
      out.push_back(rec);
      status = c.all() ? 0 : 1;
    } else if (m_fe->parsed()) {
      require_affine(n, r);
      EnFactor f = factor_en(parse_weight(lambda_text, "--lambda", n, r), radius);
      Record rec("monomial.factor-en");
      add_weight(rec, "lambda", f.m.source);
      add_poly(rec, "z_num", f.z_num);
      add_poly(rec, "z_den", f.z_den);
      add_word(rec, "m", f.m.word);
      rec.add("window", f.window.to_string());
      rec.add("verified", f.verified);
      out.push_back(rec);
      status = f.verified ? 0 : 1;
    } else if (x_from->parsed()) {
      Weight lam = parse_weight(lambda_text, "--lambda", n, r), mu = parse_weight(mu_text, "--mu", n, r);
      AffinePerm d = parse_perm(r, d_text, "--d");
      PeriodicMatrix a = matrix_from_coset(lam, mu, d);
      Record rec("matrix.from-coset");
      add_weight(rec, "lambda", lam);
      add_weight(rec, "mu", mu);
      add_perm(rec, "d", d);
      rec.add("d_stat", d_stat(a)).add("aperiodic", is_aperiodic(a));
      add_matrix(rec, a);
      out.push_back(rec);
    } else if (x_to->parsed() || x_d->parsed() || x_ap->parsed()) {
      if (n < 1) throw UsageError("--n: must be positive");
      PeriodicMatrix a = parse_matrix(n, entries);
      if (x_to->parsed()) {
        CosetData c = coset_from_matrix(a);
        Record rec("matrix.to-coset");
        add_weight(rec, "lambda", c.lambda);
        add_weight(rec, "mu", c.mu);
        add_perm(rec, "d", c.d);
        out.push_back(rec);
      } else if (x_d->parsed()) {
        Record rec("matrix.dstat");
        rec.add("d_stat", d_stat(a));
        add_poly(rec, "bracket_coefficient", bracket_coefficient(a));
        add_matrix(rec, a);
        out.push_back(rec);
      } else {
        Record rec("matrix.aperiodic");
        rec.add("aperiodic", is_aperiodic(a));
        add_matrix(rec, a);
        out.push_back(rec);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  for (const auto& rec : out) rec.print(std::cout, json);
  return status;
}
