#pragma once

// Compositions of r into n nonnegative parts, and their Young subgroups.

#include <compare>
#include <string>
#include <vector>

#include "aschur/aweyl.hpp"

namespace aschur {

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> parts);

  int n() const { return static_cast<int>(parts_.size()); }
  int r() const { return r_; }
  const std::vector<int>& parts() const { return parts_; }
  // 1-based, read periodically: at(j + n) == at(j).
  int at(int j) const;

  // (1^r, 0^(n-r)). Requires n >= r.
  static Weight omega(int n, int r);
  // "2,0,1"
  static Weight parse(const std::string& text);
  std::string to_string() const;  // "(2,0,1)"

  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<int> parts_;
  int r_ = 0;
};

// All of Lambda(n, r), in lexicographically decreasing order of parts.
std::vector<Weight> all_weights(int n, int r);

// {s_i : i, i+1 in the same block, i < r}.
ParabolicIndex young_subgroup(const Weight& lambda);
// Generators of young_subgroup(lambda) with every index moved by t modulo r.
ParabolicIndex shifted_young_subgroup(const Weight& lambda, int t);

// lambda + alpha_i, with alpha_i = e_i - e_{i+1} read modulo n. Entries may
// go negative; callers check.
std::vector<int> add_root(const std::vector<int>& parts, int i, int sign);

}  // namespace aschur
