#pragma once

#include "psik/errors.hpp"
#include "psik/precision.hpp"

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace psik {

/// Signed Stirling number of the first kind s(n, m): the coefficient of x^m in
/// the falling factorial x(x-1)...(x-n+1). Zero for m > n. Memoized.
ExactInt stirling_first(unsigned n, unsigned m);

/// Bernoulli number B_n with B_1 = -1/2. Memoized.
ExactRat bernoulli(unsigned n);

ExactInt factorial(unsigned n);
ExactInt binomial(unsigned n, unsigned k);

/// Multiplicities (b_1, ..., b_{r+1}) of a partition of 2r into exactly r
/// parts: sum_i i*b_i = 2r and sum_i b_i = r. Stored 0-based (b[0] is b_1).
struct PartitionSolution {
  std::vector<unsigned> b;

  unsigned parts() const;
  unsigned weight() const;
  friend bool operator==(const PartitionSolution&, const PartitionSolution&) = default;
};

/// All solutions for h(r), each exactly once, in lexicographic order of
/// (b_1, ..., b_{r+1}). r = 0 yields the single empty solution.
std::vector<PartitionSolution> enumerate_h_solutions(unsigned r);

/// (r - b_1)! / (b_2! ... b_{r+1}!).
ExactInt h_weight(const PartitionSolution& sol);

/// Convolution kernel s(1), s(2), ... with 1-based access.
template <class T>
class KernelSequence {
 public:
  KernelSequence() = default;
  explicit KernelSequence(std::vector<T> terms) : terms_(std::move(terms)) {}

  /// s(i) for i >= 1; terms past the stored length are zero.
  T operator()(std::size_t i) const {
    if (i == 0) throw DomainError("kernel sequences are indexed from 1");
    return i <= terms_.size() ? terms_[i - 1] : T(0);
  }
  std::size_t size() const { return terms_.size(); }
  const std::vector<T>& terms() const { return terms_; }

 private:
  std::vector<T> terms_;
};

/// The kernel s(i) = s(z, i) used with Guinand-type relations.
KernelSequence<ExactRat> stirling_kernel(unsigned z, std::size_t length);

namespace detail {

template <class T>
T exact_to(const ExactInt& n) {
  if constexpr (std::is_same_v<T, ExactRat> || std::is_same_v<T, ExactInt>) {
    return T(n);
  } else {
    return from_integer<T>(n);
  }
}

template <class T>
T ipow(const T& base, unsigned e) {
  T result(1);
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

template <class T>
bool is_zero(const T& v) {
  return v == T(0);
}

}  // namespace detail

/// h(r) = sum over enumerate_h_solutions(r) of
///   (-1)^{b_1} prod_i s(i)^{b_i} (r - b_1)! / (b_2! ... b_{r+1}!).
template <class T>
T h_of_r(unsigned r, const KernelSequence<T>& s) {
  T total(0);
  for (const auto& sol : enumerate_h_solutions(r)) {
    T term = detail::exact_to<T>(h_weight(sol));
    for (std::size_t i = 0; i < sol.b.size(); ++i) {
      if (sol.b[i] != 0) term *= detail::ipow(s(i + 1), sol.b[i]);
    }
    if (!sol.b.empty() && sol.b[0] % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

/// g(k) = sum_{r=0}^{k} s(k - r + 1) f(r). `f` is 0-based.
template <class T>
T forward_convolve(const std::vector<T>& f, const KernelSequence<T>& s, unsigned k) {
  if (detail::is_zero(s(1))) throw DivisionByZeroError("kernel must have s(1) != 0");
  if (f.size() <= k) throw DomainError("sequence f too short for requested index");
  T g(0);
  for (unsigned r = 0; r <= k; ++r) g += s(k - r + 1) * f[r];
  return g;
}

/// f(k) = sum_{r=0}^{k} (-1)^r h(r) g(k - r) / s(1)^{r+1}, inverting
/// forward_convolve. `g` is 0-based.
template <class T>
T invert_sequence(const std::vector<T>& g, const KernelSequence<T>& s, unsigned k) {
  const T s1 = s(1);
  if (detail::is_zero(s1)) throw DivisionByZeroError("kernel must have s(1) != 0");
  if (g.size() <= k) throw DomainError("sequence g too short for requested index");
  T f(0);
  T s1_pow = s1;
  for (unsigned r = 0; r <= k; ++r) {
    T term = h_of_r(r, s) * g[k - r] / s1_pow;
    if (r % 2 == 1) term = -term;
    f += term;
    s1_pow *= s1;
  }
  return f;
}

/// First column of the inverse of the n x n lower-triangular Toeplitz matrix
/// whose first column is (s(1), ..., s(n)), by exact forward substitution.
std::vector<ExactRat> toeplitz_inverse_oracle(const KernelSequence<ExactRat>& s, unsigned n);

std::string to_string(const ExactRat& q);

}  // namespace psik
