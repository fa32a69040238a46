#include "doctest.h"

#include <random>
#include <vector>

#include "aschur/ring.hpp"

using aschur::LaurentPoly;
using aschur::Rational;

namespace {

LaurentPoly v(int e = 1) { return LaurentPoly::monomial(e); }

// Dense oracle: coefficient vector with an exponent offset, multiplied by
// plain convolution.
struct Dense {
  int low = 0;
  std::vector<Rational> c;
};

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  d.low = p.min_degree();
  d.c.assign(p.max_degree() - d.low + 1, 0);
  for (const auto& [e, x] : p.terms()) d.c[e - d.low] = x;
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly p;
  for (size_t i = 0; i < d.c.size(); ++i) p += LaurentPoly::monomial(d.low + int(i), d.c[i]);
  return p;
}

LaurentPoly naive_mul(const LaurentPoly& a, const LaurentPoly& b) {
  Dense x = to_dense(a), y = to_dense(b), z;
  if (x.c.empty() || y.c.empty()) return {};
  z.low = x.low + y.low;
  z.c.assign(x.c.size() + y.c.size() - 1, 0);
  for (size_t i = 0; i < x.c.size(); ++i)
    for (size_t j = 0; j < y.c.size(); ++j) z.c[i + j] += x.c[i] * y.c[j];
  return from_dense(z);
}

// q-Pascal recurrence in the balanced normalization.
LaurentPoly pascal_binom(int m, int t) {
  if (t == 0) return 1;
  if (m < t) return {};
  return v(m - t) * pascal_binom(m - 1, t - 1) + v(-t) * pascal_binom(m - 1, t);
}

LaurentPoly product_of_ints(int m) {
  LaurentPoly p = 1;
  for (int k = 1; k <= m; ++k) {
    LaurentPoly qi;
    for (int j = 0; j < k; ++j) qi += v(k - 1 - 2 * j);
    p = naive_mul(p, qi);
  }
  return p;
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), exp(-4, 4), num(-5, 5), den(1, 3);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p += LaurentPoly::monomial(exp(rng), c);
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK((v() + 1) * (v() - 1) == v(2) - 1);
  LaurentPoly p = v(3) * Rational(2, 3) - v(-1);
  CHECK(p + 0 == p);
  CHECK((v() + v(-1)) * (v() + v(-1)) == naive_mul(v() + v(-1), v() + v(-1)));
  CHECK((v() + v(-1)) * (v() + v(-1)) == v(2) + 2 + v(-2));
  CHECK((p - p).is_zero());
  CHECK((p * Rational(0)).is_zero());
  CHECK(-(-p) == p);
  CHECK((v() - v()).terms().empty());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == naive_mul(a, b));
    LaurentPoly s = a * b + c;
    for (const auto& [e, x] : s.terms()) REQUIRE(x != 0);
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    REQUIRE(*q == a);
  }
  CHECK_FALSE((v() + 2).divide_exact(v() + 1).has_value());
  CHECK_FALSE(LaurentPoly(1).divide_exact(0).has_value());
  CHECK(*LaurentPoly(6).divide_exact(LaurentPoly(4)) == LaurentPoly(Rational(3, 2)));
}

TEST_CASE("quantum integers and factorials") {
  CHECK(aschur::quantum_int(0).is_zero());
  CHECK(aschur::quantum_int(1) == 1);
  CHECK(aschur::quantum_int(2) == v() + v(-1));
  CHECK(aschur::quantum_int(-3) == -aschur::quantum_int(3));
  CHECK(aschur::quantum_factorial(0) == 1);
  CHECK(aschur::quantum_factorial(1) == 1);
  CHECK(aschur::quantum_factorial(3) == v(3) + v() * 2 + v(-1) * 2 + v(-3));
  for (int m = 0; m <= 8; ++m) {
    CHECK(aschur::quantum_factorial(m) == product_of_ints(m));
    // (v - v^-1)[m] = v^m - v^-m
    CHECK((v() - v(-1)) * aschur::quantum_int(m) == v(m) - v(-m));
  }
}

TEST_CASE("gaussian binomials") {
  for (int m = -3; m <= 5; ++m) CHECK(aschur::gauss_binomial(m, 0) == 1);
  CHECK(aschur::gauss_binomial(2, 2) == 1);
  CHECK(aschur::gauss_binomial(4, 2) == v(4) + v(2) + 2 + v(-2) + v(-4));
  CHECK(aschur::gauss_binomial(1, 3).is_zero());
  for (int m = 0; m <= 8; ++m)
    for (int t = 0; t <= m + 1; ++t) {
      auto b = aschur::gauss_binomial(m, t);
      CHECK(b == pascal_binom(m, t));
      CHECK(b == b.bar());
      if (t <= m)
        CHECK(b * aschur::quantum_factorial(t) * aschur::quantum_factorial(m - t) ==
              aschur::quantum_factorial(m));
    }
  // Negative upper index through the falling-product definition.
  for (int m = -4; m < 0; ++m)
    for (int t = 1; t <= 3; ++t) {
      LaurentPoly num = 1;
      for (int k = 0; k < t; ++k) num *= aschur::quantum_int(m - k);
      CHECK(aschur::gauss_binomial(m, t) * aschur::quantum_factorial(t) == num);
    }
}

TEST_CASE("bar invariance") {
  for (int m = 0; m <= 8; ++m) {
    CHECK(aschur::quantum_int(m) == aschur::quantum_int(m).bar());
    CHECK(aschur::quantum_factorial(m) == aschur::quantum_factorial(m).bar());
  }
}

TEST_CASE("specialize") {
  CHECK(aschur::specialize(v() + v(-1), 1) == 2);
  CHECK(aschur::specialize(v(2) - 1, 1) == 0);
  for (int m = 0; m <= 8; ++m) CHECK(aschur::specialize(aschur::quantum_int(m), 1) == m);
  CHECK(aschur::specialize(v(-2) * 3, Rational(1, 2)) == 12);
  CHECK_THROWS_AS(aschur::specialize(v(), 0), std::invalid_argument);
  // Homomorphism spot check.
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng), b = random_poly(rng);
    Rational x(2, 3);
    CHECK(aschur::specialize(a * b, x) == aschur::specialize(a, x) * aschur::specialize(b, x));
  }
}

TEST_CASE("rendering") {
  CHECK((v(2) + 2 + v(-2)).to_string() == "v^2 + 2 + v^-2");
  CHECK((v(2) + 2 + v(-2)).to_string(true) == "q + 2 + q^-1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((v() * Rational(-1, 2) + 1).to_string() == "-1/2*v + 1");
  CHECK_THROWS((v() + 1).to_string(true));
}
