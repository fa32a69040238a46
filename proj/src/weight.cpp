#include "aschur/weight.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace aschur {

Weight::Weight(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("weight needs at least one part");
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("weight parts must be nonnegative");
  r_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Weight::at(int j) const {
  int n = this->n();
  int k = ((j - 1) % n + n) % n;
  return parts_[k];
}

Weight Weight::omega(int n, int r) {
  if (n < r) throw std::invalid_argument("omega needs n >= r");
  std::vector<int> p(n, 0);
  for (int i = 0; i < r; ++i) p[i] = 1;
  return Weight(p);
}

Weight Weight::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') s += c;
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t used = 0;
    int x = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad weight entry '" + tok + "'");
    parts.push_back(x);
  }
  return Weight(parts);
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

namespace {

void compositions(int n, int r, std::vector<int>& cur, std::vector<Weight>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(r);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = r; k >= 0; --k) {
    cur.push_back(k);
    compositions(n, r - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Weight> all_weights(int n, int r) {
  if (n <= 0 || r < 0) throw std::invalid_argument("all_weights: bad (n, r)");
  std::vector<Weight> out;
  std::vector<int> cur;
  compositions(n, r, cur, out);
  return out;
}

ParabolicIndex young_subgroup(const Weight& lambda) { return shifted_young_subgroup(lambda, 0); }

ParabolicIndex shifted_young_subgroup(const Weight& lambda, int t) {
  const int r = lambda.r();
  std::vector<int> gens;
  int start = 0;
  for (int p : lambda.parts()) {
    for (int i = start + 1; i < start + p; ++i) gens.push_back(((i + t - 1) % r + r) % r + 1);
    start += p;
  }
  return ParabolicIndex(r, gens);
}

std::vector<int> add_root(const std::vector<int>& parts, int i, int sign) {
  const int n = static_cast<int>(parts.size());
  std::vector<int> out = parts;
  int a = ((i - 1) % n + n) % n;
  int b = (a + 1) % n;
  out[a] += sign;
  out[b] -= sign;
  return out;
}

}  // namespace aschur
