#include "doctest.h"

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "aschur/tensor.hpp"

using namespace aschur;
using G = GeneratorSymbol;

namespace {

const LaurentPoly v = LaurentPoly::v();

int res(int t, int n) { return ((t - 1) % n + n) % n + 1; }

TensorBasisVector B(std::vector<int> idx) { return {std::move(idx)}; }
TensorVector X(std::vector<int> idx) { return TensorVector::basis(B(std::move(idx))); }

// Oracle: iterate the coproduct one tensor factor at a time,
//   E -> E (x) K_i K_{i+1}^-1 + 1 (x) E,   F -> K_i^-1 K_{i+1} (x) F + F (x) 1.
TensorVector coproduct_action(int n, bool is_e, int i, const std::vector<int>& idx) {
  TensorVector out;
  if (idx.empty()) return out;
  int t = idx[0];
  std::vector<int> rest(idx.begin() + 1, idx.end());
  auto prepend = [](int head, const TensorBasisVector& tail) {
    std::vector<int> w{head};
    w.insert(w.end(), tail.idx.begin(), tail.idx.end());
    return B(w);
  };
  int ci = 0, ci1 = 0;
  for (int u : rest) {
    ci += res(u, n) == res(i, n);
    ci1 += res(u, n) == res(i + 1, n);
  }
  if (is_e) {
    if (res(t - 1, n) == res(i, n)) out.add(prepend(t - 1, B(rest)), LaurentPoly::monomial(ci - ci1));
    TensorVector tail = coproduct_action(n, is_e, i, rest);
    for (const auto& [b, c] : tail.terms()) out.add(prepend(t, b), c);
  } else {
    int k = (res(t, n) == res(i + 1, n)) - (res(t, n) == res(i, n));
    TensorVector tail = coproduct_action(n, is_e, i, rest);
    for (const auto& [b, c] : tail.terms()) out.add(prepend(t, b), LaurentPoly::monomial(k) * c);
    if (res(t, n) == res(i, n)) out.add(prepend(t + 1, B(rest)), 1);
  }
  return out;
}

std::vector<G> quantum_generators(int n) {
  std::vector<G> gs{G::R(), G::Rinv()};
  for (int i = 1; i <= n; ++i)
    for (const auto& g : {G::E(i), G::F(i), G::K(i), G::Kinv(i)}) gs.push_back(g);
  return gs;
}

}  // namespace

TEST_CASE("generator examples") {
  CHECK(act_generator(3, G::K(1), B({1})) == v * X({1}));
  CHECK(act_generator(3, G::E(1), B({1, 2})) == X({1, 1}));
  CHECK(act_generator(3, G::R(), B({1, 2})) == X({2, 3}));
  CHECK(act_generator(3, G::Rinv(), B({2, 3})) == X({1, 2}));
  CHECK(act_generator(3, G::E(1), B({1, 1})).is_zero());
  CHECK(B({1, 2}).to_string() == "e[1,2]");
  // indices read modulo n
  CHECK(act_generator(3, G::E(4), B({1, 2})) == act_generator(3, G::E(1), B({1, 2})));
  CHECK(act_generator(3, G::F(0), B({3, 2})) == act_generator(3, G::F(3), B({3, 2})));
}

TEST_CASE("E and F agree with the iterated coproduct") {
  for (auto [n, r] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{5, 3}})
    for (const auto& b : window_basis(r, default_window(n, 1)))
      for (int i = 1; i <= n; ++i) {
        REQUIRE(act_generator(n, G::E(i), b) == coproduct_action(n, true, i, b.idx));
        REQUIRE(act_generator(n, G::F(i), b) == coproduct_action(n, false, i, b.idx));
      }
}

TEST_CASE("word evaluation") {
  auto x = X({1, 2}) + v * X({0, 4});
  CHECK(act_word(3, {}, x) == x);
  CHECK(act_word(3, {G::K(1), G::Kinv(1)}, x) == x);
  // right to left
  CHECK(act_word(3, {G::R(), G::E(1)}, X({1, 2})) == X({2, 2}));
  // (v - v^-1)(E1 F1 - F1 E1) = K1 K2^-1 - K1^-1 K2 on e1 (x) e2
  const LaurentPoly d = v - LaurentPoly::monomial(-1);
  auto lhs = d * (act_word(3, {G::E(1), G::F(1)}, X({1, 2})) - act_word(3, {G::F(1), G::E(1)}, X({1, 2})));
  auto rhs = act_word(3, {G::K(1), G::Kinv(2)}, X({1, 2})) - act_word(3, {G::Kinv(1), G::K(2)}, X({1, 2}));
  CHECK(lhs == rhs);
  // on e1 (x) e1 the right side is (v^2 - v^-2) e1 (x) e1
  auto y = X({1, 1});
  auto lhs2 = d * (act_word(3, {G::E(1), G::F(1)}, y) - act_word(3, {G::F(1), G::E(1)}, y));
  CHECK(lhs2 == (LaurentPoly::monomial(2) - LaurentPoly::monomial(-2)) * y);
}

TEST_CASE("Q5 on the window before anything else") {
  const LaurentPoly d = v - LaurentPoly::monomial(-1);
  for (auto [n, r] : {std::pair{3, 2}, std::pair{4, 3}})
    for (const auto& b : window_basis(r, default_window(n, 2))) {
      auto x = TensorVector::basis(b);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          auto comm = act_word(n, {G::E(i), G::F(j)}, x) - act_word(n, {G::F(j), G::E(i)}, x);
          TensorVector rhs;
          if (i == j)
            rhs = act_word(n, {G::K(i), G::Kinv(i + 1)}, x) - act_word(n, {G::Kinv(i), G::K(i + 1)}, x);
          REQUIRE(d * comm == rhs);
        }
    }
}

TEST_CASE("weights") {
  CHECK(weight_of(3, B({1, 2})) == Weight({1, 1, 0}));
  CHECK(weight_of(3, B({1, 4})) == Weight({2, 0, 0}));
  CHECK(weight_of(4, B({2, 3, 4})) == Weight({0, 1, 1, 1}));
  CHECK(weight_of(3, B({-2, 0})) == Weight({1, 0, 1}));

  auto om = weight_space_basis(Weight::omega(3, 2), {1, 3});
  CHECK(om == std::vector<TensorBasisVector>{B({1, 2}), B({2, 1})});
  auto two = weight_space_basis(Weight({2, 0, 0}), {1, 3});
  CHECK(two == std::vector<TensorBasisVector>{B({1, 1})});
  CHECK(weight_space_basis(Weight({0, 0, 2}), {1, 2}).empty());

  // Filtering the whole window gives the same sets.
  for (auto [n, r] : {std::pair{3, 2}, std::pair{4, 3}}) {
    Window w = default_window(n, 2);
    auto all = window_basis(r, w);
    CHECK(all.size() == static_cast<size_t>(std::pow(w.hi - w.lo + 1, r)));
    size_t total = 0;
    for (const auto& lam : all_weights(n, r)) {
      std::set<TensorBasisVector> got;
      for (const auto& b : weight_space_basis(lam, w)) got.insert(b);
      std::set<TensorBasisVector> want;
      for (const auto& b : all)
        if (weight_of(n, b) == lam) want.insert(b);
      REQUIRE(got == want);
      total += got.size();
    }
    CHECK(total == all.size());
  }
}

TEST_CASE("shift equivariance") {
  for (auto [n, r] : {std::pair{3, 2}, std::pair{4, 3}}) {
    auto gens = quantum_generators(n);
    for (int i = 1; i <= n; ++i)
      for (const auto& g : {G::e(i), G::f(i), G::H(i)}) gens.push_back(g);
    for (const auto& b : window_basis(r, default_window(n, 1)))
      for (const auto& g : gens) {
        TensorVector moved;
        TensorVector y = act_generator(n, g, b);
        for (const auto& [c, k] : y.terms()) moved.add(shift(c, n), k);
        REQUIRE(act_generator(n, g, shift(b, n)) == moved);
      }
  }
}

TEST_CASE("weight transport") {
  const int n = 4, r = 3;
  for (const auto& b : window_basis(r, default_window(n, 1))) {
    auto lam = weight_of(n, b).parts();
    for (int i = 1; i <= n; ++i) {
      const TensorVector up = act_generator(n, G::E(i), b);
      for (const auto& [c, k] : up.terms()) REQUIRE(weight_of(n, c).parts() == add_root(lam, i, 1));
      const TensorVector down = act_generator(n, G::F(i), b);
      for (const auto& [c, k] : down.terms()) REQUIRE(weight_of(n, c).parts() == add_root(lam, i, -1));
      REQUIRE(act_generator(n, G::K(i), b) == LaurentPoly::monomial(lam[i - 1]) * TensorVector::basis(b));
    }
  }
}

TEST_CASE("tau on V_omega") {
  CHECK(act(3, tau(3, 2, TauTarget::S, TauVariant::WithR, 1), X({1, 2})) == v * X({2, 1}));
  CHECK_THROWS_AS(tau(2, 2, TauTarget::Rho), std::invalid_argument);
  CHECK_THROWS_AS(tau(3, 2, TauTarget::S, TauVariant::WithR, 2), std::invalid_argument);
  for (auto [n, r] : {std::pair{3, 2}, std::pair{4, 3}}) {
    auto basis = weight_space_basis(Weight::omega(n, r), default_window(n, 3));
    REQUIRE(!basis.empty());
    for (auto variant : {TauVariant::WithR, TauVariant::RFree}) {
      auto rr = tau(n, r, TauTarget::Rho, variant) * tau(n, r, TauTarget::RhoInv, variant);
      auto rr2 = tau(n, r, TauTarget::RhoInv, variant) * tau(n, r, TauTarget::Rho, variant);
      for (const auto& b : basis) {
        auto x = TensorVector::basis(b);
        REQUIRE(act(n, rr, x) == x);
        REQUIRE(act(n, rr2, x) == x);
      }
    }
    for (auto t : {TauTarget::Rho, TauTarget::RhoInv, TauTarget::Sr})
      for (const auto& b : basis) {
        auto x = TensorVector::basis(b);
        REQUIRE(act(n, tau(n, r, t, TauVariant::WithR), x) == act(n, tau(n, r, t, TauVariant::RFree), x));
      }
    // R e = F_1 ... F_r e on V_omega
    std::vector<G> fs;
    for (int k = 1; k <= r; ++k) fs.push_back(G::F(k));
    for (const auto& b : basis) REQUIRE(act_generator(n, G::R(), b) == act_word(n, fs, TensorVector::basis(b)));
  }
}

TEST_CASE("classical action") {
  CHECK(classical_act(3, G::H(1), B({1, 2})) == X({1, 2}));
  CHECK(classical_act(3, G::e(1), B({1, 2})) == X({1, 1}));
  CHECK(classical_act(3, G::f(1), B({1, 1})) == X({2, 1}) + X({1, 2}));
  CHECK_THROWS_AS(classical_act(3, G::E(1), B({1, 2})), std::invalid_argument);

  std::mt19937 rng(11);
  const int n = 3, r = 2;
  auto basis = window_basis(r, default_window(n, 2));
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < 50; ++k) {
    TensorVector x;
    for (int m = 0; m < 3; ++m) x.add(basis[pick(rng)], coef(rng));
    for (int i = 1; i <= n; ++i) {
      auto lhs = act_word(n, {G::e(i), G::f(i)}, x) - act_word(n, {G::f(i), G::e(i)}, x);
      auto rhs = act_word(n, {G::H(i)}, x) - act_word(n, {G::H(i + 1)}, x);
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("operator expressions") {
  OperatorExpr a = G::E(1);
  OperatorExpr b = G::F(2);
  auto ab = a * b;
  REQUIRE(ab.terms().size() == 1);
  CHECK(ab.terms().begin()->first == Word{G::E(1), G::F(2)});
  CHECK((a + a).terms().begin()->second == 2);
  CHECK((a - a).is_zero());
  CHECK(power(G::E(2), 3).max_word_length() == 3);
  CHECK(word_to_string({G::E(1), G::Kinv(2), G::Proj(Weight({1, 1, 0}))}) == "E1 K2^-1 P(1,1,0)");
  CHECK(act(3, OperatorExpr::identity(), X({1, 2})) == X({1, 2}));
  CHECK(act(3, G::Proj(Weight({2, 0, 0})), X({1, 2})).is_zero());
}

TEST_CASE("word parsing") {
  CHECK(parse_word("E1 F2 K3^-1 R R^-1 P(1,1,0) e1 f2 H3") ==
        Word{G::E(1), G::F(2), G::Kinv(3), G::R(), G::Rinv(), G::Proj(Weight({1, 1, 0})), G::e(1), G::f(2), G::H(3)});
  CHECK(parse_word("E3^2 P(0,2,0)") == Word{G::E(3), G::E(3), G::Proj(Weight({0, 2, 0}))});
  CHECK(parse_word("1").empty());
  CHECK(parse_word("  ").empty());
  for (const auto& w : {Word{G::E(1), G::K(2)}, Word{G::Kinv(4), G::Proj(Weight({2, 0, 1})), G::Rinv()}})
    CHECK(parse_word(word_to_string(w)) == w);
  CHECK_THROWS_AS(parse_word("X1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("E"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("E1^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("P(1,1"), std::invalid_argument);
}
