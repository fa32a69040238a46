#include "aschur/latmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "aschur/schur.hpp"

namespace aschur {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Partial sums L_0 = 0, ..., L_n.
std::vector<int> partial_sums(const Weight& w) {
  std::vector<int> out{0};
  for (int p : w.parts()) out.push_back(out.back() + p);
  return out;
}

// Index j of the block containing u.
int block_of(const std::vector<int>& sums, int r, int n, int u) {
  int k = floor_div(u - 1, r);
  int u0 = u - k * r;
  int j0 = 1;
  while (sums[j0] < u0) ++j0;
  return j0 + k * n;
}

}  // namespace

int PeriodicMatrix::r() const {
  int s = 0;
  for (const auto& [ij, a] : entries_) s += a;
  return s;
}

int PeriodicMatrix::at(int i, int j) const {
  int k = floor_div(i - 1, n_);
  auto it = entries_.find({i - k * n_, j - k * n_});
  return it == entries_.end() ? 0 : it->second;
}

void PeriodicMatrix::set(int i, int j, int value) {
  if (value < 0) throw std::invalid_argument("matrix entries are nonnegative");
  int k = floor_div(i - 1, n_);
  std::pair<int, int> key{i - k * n_, j - k * n_};
  if (value == 0)
    entries_.erase(key);
  else
    entries_[key] = value;
}

std::pair<int, int> PeriodicMatrix::band() const {
  if (entries_.empty()) return {0, 0};
  int lo = entries_.begin()->first.second - entries_.begin()->first.first, hi = lo;
  for (const auto& [ij, a] : entries_) {
    lo = std::min(lo, ij.second - ij.first);
    hi = std::max(hi, ij.second - ij.first);
  }
  return {lo, hi};
}

std::string PeriodicMatrix::to_string() const {
  auto [lo, hi] = band();
  int c0 = 1 + lo, c1 = n_ + hi;
  std::ostringstream os;
  os << "n=" << n_ << " r=" << r() << " cols [" << c0 << "," << c1 << "]";
  for (int i = 1; i <= n_; ++i) {
    os << "\n";
    for (int j = c0; j <= c1; ++j) os << (j > c0 ? " " : "") << at(i, j);
  }
  return os.str();
}

RowColSums row_col_sums(const PeriodicMatrix& a) {
  const int n = a.n();
  RowColSums out{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (const auto& [ij, x] : a.entries()) {
    out.rows[ij.first - 1] += x;
    int j0 = ij.second - n * floor_div(ij.second - 1, n);
    out.cols[j0 - 1] += x;
  }
  return out;
}

int d_stat_with_extent(const PeriodicMatrix& a, int extent) {
  const int n = a.n();
  // Entries of rows 1..n grouped by row.
  std::vector<std::vector<std::pair<int, int>>> rows(n + 1);
  for (const auto& [ij, x] : a.entries()) rows[ij.first].push_back({ij.second, x});
  long total = 0;
  for (int i = 1; i <= n; ++i)
    for (const auto& [j, aij] : rows[i])
      for (int k = i - extent; k <= i; ++k) {
        int m = floor_div(k - 1, n);
        for (const auto& [l0, akl] : rows[k - m * n]) {
          int l = l0 + m * n;
          if (j < l) total += static_cast<long>(aij) * akl;
        }
      }
  return static_cast<int>(total);
}

int d_stat(const PeriodicMatrix& a) {
  auto [lo, hi] = a.band();
  int extent = (hi - lo) + a.n();
  int d = d_stat_with_extent(a, extent);
  if (d_stat_with_extent(a, 2 * extent) != d) throw std::logic_error("d_stat: band-limited sum is not stable");
  return d;
}

bool is_aperiodic(const PeriodicMatrix& a) {
  auto [lo, hi] = a.band();
  const int n = a.n();
  for (int p = lo; p <= hi; ++p) {
    if (p == 0) continue;
    bool used = false, gap = false;
    for (int k = 1; k <= n; ++k) (a.at(k, k + p) > 0 ? used : gap) = true;
    if (used && !gap) return false;
  }
  return true;
}

PeriodicMatrix matrix_from_coset(const Weight& lambda, const Weight& mu, const AffinePerm& d,
                                 MatrixOrientation orientation) {
  const int n = lambda.n(), r = lambda.r();
  if (mu.n() != n || mu.r() != r || d.r() != r)
    throw std::invalid_argument("matrix_from_coset: lambda, mu and d must share n and r");
  if (!is_double_coset_min(lambda, mu, d))
    throw std::invalid_argument("matrix_from_coset: " + d.to_string() + " is not minimal in its double coset");
  const AffinePerm f = orientation == MatrixOrientation::Forward ? d : inverse(d);
  const auto ls = partial_sums(lambda), ms = partial_sums(mu);
  PeriodicMatrix out(n);
  for (int t = 1; t <= r; ++t) {
    int i = block_of(ls, r, n, t);
    int j = block_of(ms, r, n, f(t));
    out.set(i, j, out.at(i, j) + 1);
  }
  return out;
}

CosetData coset_from_matrix(const PeriodicMatrix& a) {
  const int n = a.n(), r = a.r();
  if (n < 1 || r < 1) throw std::invalid_argument("coset_from_matrix: needs n >= 1 and a nonzero matrix");
  RowColSums sums = row_col_sums(a);
  Weight lambda(sums.rows), mu(sums.cols);
  const auto ls = partial_sums(lambda), ms = partial_sums(mu);
  auto [lo, hi] = a.band();

  // start[(i, j0)]: offset in B_{j0}^mu of the part of column j0 that row i
  // receives, filling the column from the smallest row up.
  std::map<std::pair<int, int>, int> start;
  for (int j0 = 1; j0 <= n; ++j0) {
    int offset = 0;
    for (int i = j0 - hi; i <= j0 - lo; ++i) {
      int x = a.at(i, j0);
      if (x == 0) continue;
      start[{i, j0}] = offset;
      offset += x;
    }
  }

  std::vector<int> images(r);
  for (int i = 1; i <= n; ++i) {
    int t = ls[i - 1] + 1;
    for (int j = i + lo; j <= i + hi; ++j) {
      int x = a.at(i, j);
      if (x == 0) continue;
      int m = floor_div(j - 1, n);
      int j0 = j - m * n;
      int first = ms[j0 - 1] + 1 + start.at({i - m * n, j0}) + m * r;
      for (int c = 0; c < x; ++c) images[t++ - 1] = first + c;
    }
  }
  AffinePerm w = AffinePerm::from_images(r, images);
  AffinePerm d = double_coset_min(w, young_subgroup(lambda), young_subgroup(mu));
  if (matrix_from_coset(lambda, mu, d) != a) throw std::logic_error("coset_from_matrix: round trip failed");
  return {lambda, mu, d};
}

LaurentPoly bracket_coefficient(const PeriodicMatrix& a) { return LaurentPoly::monomial(-d_stat(a)); }

}  // namespace aschur
