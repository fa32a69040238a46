#pragma once

// Periodic Z x Z matrices with a_{i+n,j+n} = a_{i,j}, indexing the basis of
// the affine q-Schur algebra, and their correspondence with double cosets.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aschur/aweyl.hpp"
#include "aschur/ring.hpp"
#include "aschur/weight.hpp"

namespace aschur {

class PeriodicMatrix {
 public:
  PeriodicMatrix() = default;
  explicit PeriodicMatrix(int n) : n_(n) {}

  int n() const { return n_; }
  // Sum of the entries in rows 1..n.
  int r() const;

  // Any i, j; read through periodicity.
  int at(int i, int j) const;
  // Stores a_{i,j} (and its translates). Zero erases.
  void set(int i, int j, int value);

  // Nonzero entries of rows 1..n, keyed (i, j).
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  // Smallest and largest j - i over nonzero entries; {0, 0} when empty.
  std::pair<int, int> band() const;

  // "n=3 r=2 cols [1,3]" followed by one line per row.
  std::string to_string() const;

  auto operator<=>(const PeriodicMatrix&) const = default;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, int> entries_;
};

struct RowColSums {
  std::vector<int> rows;  // r(A)_i = sum_j a_{i,j}
  std::vector<int> cols;  // c(A)_j = sum_i a_{i,j}
};
RowColSums row_col_sums(const PeriodicMatrix& a);

// d_A = sum over 1 <= i <= n, k <= i, j < l of a_{i,j} a_{k,l}, summed over
// rows k within the band plus one period. Throws std::logic_error if a sum
// over twice that range disagrees.
int d_stat(const PeriodicMatrix& a);
// The same sum over an explicit range of rows k in [i - extent, i].
int d_stat_with_extent(const PeriodicMatrix& a, int extent);

// Every diagonal j - i = p != 0 that carries a nonzero entry also has a zero
// in rows 1..n.
bool is_aperiodic(const PeriodicMatrix& a);

// Block i of lambda is {L_{i-1} + 1, ..., L_i} with L_i = lambda_1 + ... +
// lambda_i, extended by B_{i+n} = B_i + r.
//   Forward:  a_{i,j} = #{t in B_i^lambda : (t)d in B_j^mu}
//   Inverse:  a_{i,j} = #{t in B_i^lambda : (t)d^-1 in B_j^mu}
enum class MatrixOrientation { Forward, Inverse };

PeriodicMatrix matrix_from_coset(const Weight& lambda, const Weight& mu, const AffinePerm& d,
                                 MatrixOrientation orientation = MatrixOrientation::Forward);

struct CosetData {
  Weight lambda;
  Weight mu;
  AffinePerm d;
};
// lambda = r(A), mu = c(A), d the minimal representative whose forward
// matrix is A. Throws std::invalid_argument if the sums are not
// compositions of one r.
CosetData coset_from_matrix(const PeriodicMatrix& a);

// v^{-d_A}: [A] = v^{-d_A} e_A.
LaurentPoly bracket_coefficient(const PeriodicMatrix& a);

}  // namespace aschur
