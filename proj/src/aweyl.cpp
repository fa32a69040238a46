#include "aschur/aweyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace aschur {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod1(int t, int r) { return t - r * floor_div(t - 1, r); }  // in 1..r

void check_period(const AffinePerm& a, const AffinePerm& b) {
  if (a.r() != b.r()) throw std::invalid_argument("affine permutations with different periods");
}

}  // namespace

AffinePerm AffinePerm::from_images(int r, const std::vector<int>& images) {
  if (r <= 0 || static_cast<int>(images.size()) != r)
    throw std::invalid_argument("from_images: need exactly r images");
  std::vector<bool> seen(r, false);
  long sum = 0;
  for (int x : images) {
    int res = mod1(x, r) - 1;
    if (seen[res]) throw std::invalid_argument("from_images: images are not distinct modulo r");
    seen[res] = true;
    sum += x;
  }
  long base = static_cast<long>(r) * (r + 1) / 2;
  if ((sum - base) % r != 0) throw std::invalid_argument("from_images: image sum is not r(r+1)/2 mod r");
  int z = static_cast<int>((sum - base) / r);
  // c(t) = f(t - z)
  AffinePerm f(0, images);
  std::vector<int> w(r);
  for (int t = 1; t <= r; ++t) w[t - 1] = f(t - z);
  return AffinePerm(z, std::move(w));
}

AffinePerm AffinePerm::from_normal_form(int r, int z, const std::vector<int>& window) {
  AffinePerm c = from_images(r, window);
  if (c.z() != 0) throw std::invalid_argument("window does not sum to r(r+1)/2");
  return AffinePerm(z, c.window_);
}

AffinePerm AffinePerm::identity(int r) {
  std::vector<int> w(r);
  std::iota(w.begin(), w.end(), 1);
  return AffinePerm(0, std::move(w));
}

AffinePerm AffinePerm::s(int r, int i) {
  if (i < 1 || i > r) throw std::invalid_argument("simple reflection index out of range");
  if (r == 1) throw std::invalid_argument("no simple reflections for r = 1");
  std::vector<int> w(r);
  std::iota(w.begin(), w.end(), 1);
  if (i < r) {
    std::swap(w[i - 1], w[i]);
  } else {
    w[0] = 0;
    w[r - 1] = r + 1;
  }
  return AffinePerm(0, std::move(w));
}

AffinePerm AffinePerm::rho(int r, int power) {
  AffinePerm id = identity(r);
  id.z_ = power;
  return id;
}

int AffinePerm::operator()(int t) const {
  const int r = this->r();
  int u = t + z_;
  int q = floor_div(u - 1, r);
  return window_[u - 1 - q * r] + q * r;
}

std::vector<int> AffinePerm::images() const {
  std::vector<int> out(r());
  for (int t = 1; t <= r(); ++t) out[t - 1] = (*this)(t);
  return out;
}

AffinePerm AffinePerm::w_part() const { return AffinePerm(0, window_); }

bool AffinePerm::is_identity() const { return z_ == 0 && *this == identity(r()); }

bool AffinePerm::in_finite_part() const {
  if (z_ != 0) return false;
  for (int x : window_)
    if (x < 1 || x > r()) return false;
  return true;
}

std::string AffinePerm::to_string() const {
  std::ostringstream os;
  os << "rho^" << z_ << " * [";
  for (size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
  os << "]";
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty entry in integer list");
    tok = tok.substr(a, b - a + 1);
    size_t used = 0;
    int x = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

}  // namespace

AffinePerm AffinePerm::parse(int r, const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.rfind("rho^", 0) == 0) {
    size_t star = s.find('*');
    if (star == std::string::npos) throw std::invalid_argument("expected 'rho^z * [..]'");
    int z = std::stoi(s.substr(4, star - 4));
    std::string rest = s.substr(star + 1);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
      throw std::invalid_argument("expected bracketed window");
    return from_normal_form(r, z, parse_int_list(rest.substr(1, rest.size() - 2)));
  }
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  return from_images(r, parse_int_list(s));
}

AffinePerm compose(const AffinePerm& a, const AffinePerm& b) {
  check_period(a, b);
  std::vector<int> img(a.r());
  for (int t = 1; t <= a.r(); ++t) img[t - 1] = b(a(t));
  return AffinePerm::from_images(a.r(), img);
}

AffinePerm operator*(const AffinePerm& a, const AffinePerm& b) { return compose(a, b); }

AffinePerm inverse(const AffinePerm& w) {
  const int r = w.r();
  std::vector<int> img(r);
  for (int t = 1; t <= r; ++t) {
    int x = w(t);
    int res = mod1(x, r);
    // w(t + k r) = x + k r = res  =>  k = (res - x) / r
    img[res - 1] = t + (res - x);
  }
  return AffinePerm::from_images(r, img);
}

AffinePerm rho_conjugate(const AffinePerm& w) {
  return AffinePerm::rho(w.r()) * w * AffinePerm::rho(w.r(), -1);
}

AffinePerm from_word(int r, const std::vector<int>& word) {
  AffinePerm w = AffinePerm::identity(r);
  for (int i : word) w = w * AffinePerm::s(r, i);
  return w;
}

int length(const AffinePerm& w) {
  const int r = w.r();
  const auto& c = w.window();
  int len = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) len += std::abs(floor_div(c[j] - c[i], r));
  return len;
}

std::vector<int> reduced_word(const AffinePerm& w) {
  const int r = w.r();
  AffinePerm c = w.w_part();
  std::vector<int> word;
  int len = length(c);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= r; ++i) {
      AffinePerm next = AffinePerm::s(r, i) * c;
      int nl = length(next);
      if (nl < len) {
        word.push_back(i);
        c = next;
        len = nl;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  return word;
}

ParabolicIndex::ParabolicIndex(int r, std::vector<int> gens) : r_(r), gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (int i : gens_)
    if (i < 1 || i > r) throw std::invalid_argument("parabolic generator out of range");
  if (static_cast<int>(gens_.size()) == r) throw std::invalid_argument("parabolic index must be proper");
}

bool ParabolicIndex::contains(int i) const { return std::binary_search(gens_.begin(), gens_.end(), i); }

bool is_distinguished(const AffinePerm& d, const ParabolicIndex& pi) {
  int l = length(d);
  for (int i : pi.gens())
    if (length(AffinePerm::s(d.r(), i) * d) < l) return false;
  return true;
}

bool is_distinguished_inverse(const AffinePerm& d, const ParabolicIndex& pi) {
  int l = length(d);
  for (int i : pi.gens())
    if (length(d * AffinePerm::s(d.r(), i)) < l) return false;
  return true;
}

CosetDecomposition coset_decompose(const AffinePerm& w, const ParabolicIndex& pi, CosetSide side) {
  const int r = w.r();
  AffinePerm d = w;
  AffinePerm u = AffinePerm::identity(r);
  int l = length(d);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : pi.gens()) {
      AffinePerm s = AffinePerm::s(r, i);
      AffinePerm next = side == CosetSide::Left ? s * d : d * s;
      int nl = length(next);
      if (nl < l) {
        d = next;
        l = nl;
        u = side == CosetSide::Left ? u * s : s * u;
        progress = true;
        break;
      }
    }
  }
  return {u, d};
}

AffinePerm double_coset_min(const AffinePerm& w, const ParabolicIndex& pi1, const ParabolicIndex& pi2) {
  const int r = w.r();
  AffinePerm d = w;
  int l = length(d);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : pi1.gens()) {
      AffinePerm next = AffinePerm::s(r, i) * d;
      int nl = length(next);
      if (nl < l) {
        d = next, l = nl, progress = true;
      }
    }
    for (int i : pi2.gens()) {
      AffinePerm next = d * AffinePerm::s(r, i);
      int nl = length(next);
      if (nl < l) {
        d = next, l = nl, progress = true;
      }
    }
  }
  return d;
}

std::set<AffinePerm> enumerate_parabolic(const ParabolicIndex& pi) {
  const int r = pi.r();
  std::set<AffinePerm> seen{AffinePerm::identity(r)};
  std::deque<AffinePerm> queue{AffinePerm::identity(r)};
  while (!queue.empty()) {
    AffinePerm w = queue.front();
    queue.pop_front();
    for (int i : pi.gens()) {
      AffinePerm next = w * AffinePerm::s(r, i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

std::set<AffinePerm> enumerate_double_coset(const ParabolicIndex& pi1, const AffinePerm& d,
                                            const ParabolicIndex& pi2) {
  auto left = enumerate_parabolic(pi1);
  auto right = enumerate_parabolic(pi2);
  std::set<AffinePerm> out;
  for (const auto& u : left) {
    AffinePerm ud = u * d;
    for (const auto& u2 : right) out.insert(ud * u2);
  }
  return out;
}

std::set<AffinePerm> enumerate_up_to_length(int r, int max_len, int bound) {
  if (max_len > bound)
    throw std::length_error("enumeration length " + std::to_string(max_len) + " exceeds bound " +
                            std::to_string(bound));
  std::set<AffinePerm> seen{AffinePerm::identity(r)};
  std::vector<AffinePerm> frontier{AffinePerm::identity(r)};
  for (int depth = 0; depth < max_len; ++depth) {
    std::vector<AffinePerm> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= r; ++i) {
        AffinePerm x = w * AffinePerm::s(r, i);
        if (seen.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return seen;
}

SemidirectParts semidirect_decompose(const AffinePerm& w) {
  const int r = w.r();
  std::vector<int> fin(r), shift(r);
  for (int t = 1; t <= r; ++t) {
    int x = w(t);
    int res = mod1(x, r);
    fin[t - 1] = res;
    shift[res - 1] = x;  // translation sends res to x
  }
  return {AffinePerm::from_images(r, fin), AffinePerm::from_images(r, shift)};
}

}  // namespace aschur
