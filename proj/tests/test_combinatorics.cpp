#include <doctest.h>

#include "psik/combinatorics.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace psik;

namespace {

// Coefficients of x(x-1)...(x-n+1), expanded one factor at a time.
std::vector<ExactInt> falling_factorial_coefficients(unsigned n) {
  std::vector<ExactInt> poly{ExactInt(1)};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<ExactInt> next(poly.size() + 1, ExactInt(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= ExactInt(k) * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

// Akiyama-Tanigawa; yields B_1 = +1/2.
ExactRat bernoulli_akiyama(unsigned n) {
  std::vector<ExactRat> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = ExactRat(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = ExactRat(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

// Number of partitions of n by Euler's pentagonal recurrence.
ExactInt partition_count(unsigned n) {
  std::vector<ExactInt> p(n + 1, ExactInt(0));
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<int>(m)) break;
      ExactInt term = p[m - g1];
      if (g2 <= static_cast<int>(m)) term += p[m - g2];
      if (k % 2 == 1) p[m] += term; else p[m] -= term;
    }
  }
  return p[n];
}

// All vectors with 0 <= b_i <= r, in lexicographic order, filtered.
std::vector<PartitionSolution> brute_force_solutions(unsigned r) {
  std::vector<PartitionSolution> out;
  std::vector<unsigned> b(r + 1, 0);
  while (true) {
    unsigned parts = 0, weight = 0;
    for (unsigned i = 0; i <= r; ++i) {
      parts += b[i];
      weight += (i + 1) * b[i];
    }
    if (parts == r && weight == 2 * r) out.push_back({b});
    int pos = static_cast<int>(r);
    while (pos >= 0 && b[pos] == r) b[pos--] = 0;
    if (pos < 0) break;
    ++b[pos];
  }
  return out;
}

ExactRat random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  while (true) {
    ExactRat q(num(rng), den(rng));
    if (!nonzero || q != 0) return q;
  }
}

KernelSequence<ExactRat> random_kernel(std::mt19937_64& rng, std::size_t len) {
  std::vector<ExactRat> s;
  s.push_back(random_rational(rng, true));
  for (std::size_t i = 1; i < len; ++i) s.push_back(random_rational(rng));
  return KernelSequence<ExactRat>(std::move(s));
}

}  // namespace

TEST_CASE("stirling numbers match falling factorial expansion") {
  CHECK(stirling_first(2, 1) == -1);
  CHECK(stirling_first(2, 2) == 1);
  CHECK(stirling_first(2, 3) == 0);
  CHECK(stirling_first(1, 1) == 1);
  CHECK(stirling_first(4, 2) == 11);
  for (unsigned n = 1; n <= 25; ++n) {
    auto poly = falling_factorial_coefficients(n);
    for (unsigned m = 0; m <= n + 1; ++m) {
      ExactInt expect = m < poly.size() ? poly[m] : ExactInt(0);
      CHECK(stirling_first(n, m) == expect);
    }
  }
}

TEST_CASE("stirling row properties") {
  for (unsigned n = 1; n <= 30; ++n) {
    ExactInt row = 0;
    for (unsigned m = 0; m <= n; ++m) row += stirling_first(n, m);
    if (n >= 2) CHECK(row == 0);
    CHECK(stirling_first(n, n) == 1);
    ExactInt expect = factorial(n - 1);
    if ((n - 1) % 2 == 1) expect = -expect;
    CHECK(stirling_first(n, 1) == expect);
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == ExactRat(-1, 2));
  CHECK(bernoulli(2) == ExactRat(1, 6));
  CHECK(bernoulli(4) == ExactRat(-1, 30));
  for (unsigned n = 2; n <= 60; ++n) CHECK(bernoulli(n) == bernoulli_akiyama(n));
  CHECK(bernoulli(1) == -bernoulli_akiyama(1));
}

TEST_CASE("h solutions: small cases") {
  auto s0 = enumerate_h_solutions(0);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].b.empty());

  auto s1 = enumerate_h_solutions(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].b == std::vector<unsigned>{0, 1});

  auto s2 = enumerate_h_solutions(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].b == std::vector<unsigned>{0, 2, 0});
  CHECK(s2[1].b == std::vector<unsigned>{1, 0, 1});
}

TEST_CASE("h solutions agree with exhaustive scan") {
  for (unsigned r = 1; r <= 7; ++r) CHECK(enumerate_h_solutions(r) == brute_force_solutions(r));
}

TEST_CASE("h solution counts and constraints up to r = 15") {
  for (unsigned r = 0; r <= 15; ++r) {
    auto sols = enumerate_h_solutions(r);
    CHECK(ExactInt(sols.size()) == partition_count(r));
    std::set<std::vector<unsigned>> seen;
    for (const auto& s : sols) {
      CHECK(s.parts() == r);
      CHECK(s.weight() == 2 * r);
      seen.insert(s.b);
    }
    CHECK(seen.size() == sols.size());
    CHECK(std::is_sorted(sols.begin(), sols.end(),
                         [](const auto& a, const auto& b) { return a.b < b.b; }));
  }
}

TEST_CASE("h(r) closed forms") {
  std::mt19937_64 rng(7);
  auto s = random_kernel(rng, 6);
  CHECK(h_of_r(0, s) == 1);
  CHECK(h_of_r(1, s) == s(2));
  CHECK(h_of_r(2, s) == s(2) * s(2) - s(1) * s(3));

  auto st = stirling_kernel(2, 4);
  CHECK(h_of_r(0, st) == 1);
  CHECK(h_of_r(1, st) == 1);
  CHECK(h_of_r(2, st) == 1);
}

TEST_CASE("forward convolution") {
  std::mt19937_64 rng(11);
  std::vector<ExactRat> f;
  for (int i = 0; i < 8; ++i) f.push_back(random_rational(rng));
  KernelSequence<ExactRat> identity({ExactRat(1)});
  for (unsigned k = 0; k < 8; ++k) CHECK(forward_convolve(f, identity, k) == f[k]);

  auto s = random_kernel(rng, 9);
  std::vector<ExactRat> delta(8, ExactRat(0));
  delta[0] = 1;
  for (unsigned k = 0; k < 8; ++k) CHECK(forward_convolve(delta, s, k) == s(k + 1));

  std::vector<ExactRat> terms{ExactRat(2)};
  for (int i = 0; i < 8; ++i) terms.push_back(ExactRat(static_cast<int>(rng() % 11) - 5));
  KernelSequence<ExactRat> s2(terms);
  for (unsigned k = 0; k < 8; ++k) {
    ExactRat direct = 0;
    for (unsigned a = 0; a <= k; ++a)
      for (unsigned b = 0; b <= k; ++b)
        if (a + b == k) direct += terms[b] * f[a];
    CHECK(forward_convolve(f, s2, k) == direct);
  }
}

TEST_CASE("inversion round trip") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = random_kernel(rng, 14);
    std::vector<ExactRat> f, g;
    for (int i = 0; i <= 12; ++i) f.push_back(random_rational(rng));
    for (unsigned k = 0; k <= 12; ++k) g.push_back(forward_convolve(f, s, k));
    for (unsigned k = 0; k <= 12; ++k) CHECK(invert_sequence(g, s, k) == f[k]);
  }
  KernelSequence<ExactRat> identity({ExactRat(1)});
  std::vector<ExactRat> g{ExactRat(3), ExactRat(-1, 2), ExactRat(7, 3)};
  for (unsigned k = 0; k < 3; ++k) CHECK(invert_sequence(g, identity, k) == g[k]);
}

TEST_CASE("division by zero kernel") {
  KernelSequence<ExactRat> bad({ExactRat(0), ExactRat(1)});
  std::vector<ExactRat> g{ExactRat(1), ExactRat(2)};
  CHECK_THROWS_AS(invert_sequence(g, bad, 1), DivisionByZeroError);
  CHECK_THROWS_AS(toeplitz_inverse_oracle(bad, 2), DivisionByZeroError);
}

TEST_CASE("toeplitz oracle") {
  auto col = toeplitz_inverse_oracle(KernelSequence<ExactRat>({ExactRat(1), ExactRat(0), ExactRat(0)}), 3);
  CHECK(col == std::vector<ExactRat>{ExactRat(1), ExactRat(0), ExactRat(0)});
  col = toeplitz_inverse_oracle(KernelSequence<ExactRat>({ExactRat(2), ExactRat(0), ExactRat(0)}), 3);
  CHECK(col == std::vector<ExactRat>{ExactRat(1, 2), ExactRat(0), ExactRat(0)});

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_kernel(rng, 14);
    auto column = toeplitz_inverse_oracle(s, 13);
    ExactRat s1 = s(1), s1_pow = s(1);
    for (unsigned r = 0; r <= 12; ++r) {
      ExactRat h = h_of_r(r, s) / s1_pow;
      if (r % 2 == 1) h = -h;
      CHECK(column[r] == h);
      s1_pow *= s1;
    }
  }
}

TEST_CASE("telescoping identity for h") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_kernel(rng, 13);
    ExactRat s1 = s(1);
    for (unsigned l = 0; l <= 10; ++l) {
      ExactRat lhs = 0, s1_pow = s1;
      for (unsigned i = 0; i <= l; ++i) {
        ExactRat t = s(l - i + 2) * h_of_r(i, s) / s1_pow;
        lhs += i % 2 == 0 ? t : ExactRat(-t);
        s1_pow *= s1;
      }
      ExactRat rhs = h_of_r(l + 1, s) / detail::ipow(s1, l + 1);
      if (l % 2 == 1) rhs = -rhs;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("h(r) in working precision") {
  std::vector<PrecReal> terms{PrecReal(3), PrecReal("0.25"), PrecReal(-2), PrecReal(5)};
  KernelSequence<PrecReal> s(terms);
  PrecReal h2 = h_of_r(2, s);
  CHECK(abs(h2 - (PrecReal("0.0625") + PrecReal(6))) < epsilon() * 100);
}
