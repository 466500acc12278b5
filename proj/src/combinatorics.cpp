#include "psik/combinatorics.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <mutex>
#include <sstream>

namespace psik {

namespace {

std::mutex g_stirling_mutex;
std::vector<std::vector<ExactInt>> g_stirling{{ExactInt(1)}};  // row n holds s(n, 0..n)

std::mutex g_bernoulli_mutex;
std::vector<ExactRat> g_bernoulli{ExactRat(1)};

std::mutex g_factorial_mutex;
std::vector<ExactInt> g_factorial{ExactInt(1)};

void enumerate(unsigned r, unsigned i, unsigned count_left, unsigned weight_left,
               std::vector<unsigned>& b, std::vector<PartitionSolution>& out) {
  // b[0..i-2] fixed; choose b_i (part size i).
  if (i == r + 1) {
    // last part size r+1 absorbs the remainder
    if (weight_left == (r + 1) * count_left) {
      b[r] = count_left;
      out.push_back({b});
      b[r] = 0;
    }
    return;
  }
  for (unsigned bi = 0; bi <= count_left && bi * i <= weight_left; ++bi) {
    unsigned c = count_left - bi;
    unsigned w = weight_left - bi * i;
    // remaining c parts take sizes in [i+1, r+1]
    if ((i + 1) * c > w || (r + 1) * c < w) continue;
    b[i - 1] = bi;
    enumerate(r, i + 1, c, w, b, out);
    b[i - 1] = 0;
  }
}

}  // namespace

ExactInt stirling_first(unsigned n, unsigned m) {
  if (m > n) return ExactInt(0);
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  while (g_stirling.size() <= n) {
    const auto& prev = g_stirling.back();
    unsigned k = static_cast<unsigned>(g_stirling.size()) - 1;  // prev is row k
    std::vector<ExactInt> row(k + 2, ExactInt(0));
    for (unsigned j = 1; j <= k + 1; ++j) {
      ExactInt v = j - 1 <= k ? prev[j - 1] : ExactInt(0);
      if (j <= k) v -= ExactInt(k) * prev[j];
      row[j] = v;
    }
    g_stirling.push_back(std::move(row));
  }
  return g_stirling[n][m];
}

ExactInt factorial(unsigned n) {
  std::lock_guard<std::mutex> lock(g_factorial_mutex);
  while (g_factorial.size() <= n) {
    g_factorial.push_back(g_factorial.back() * ExactInt(static_cast<unsigned>(g_factorial.size())));
  }
  return g_factorial[n];
}

ExactInt binomial(unsigned n, unsigned k) {
  if (k > n) return ExactInt(0);
  ExactInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ExactRat bernoulli(unsigned n) {
  if (n == 1) return ExactRat(-1, 2);
  if (n > 1 && n % 2 == 1) return ExactRat(0);
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  // Sum_{j=0}^{m} C(m+1, j) B_j = 0.
  while (g_bernoulli.size() <= n) {
    unsigned m = static_cast<unsigned>(g_bernoulli.size());
    ExactRat acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += ExactRat(binomial(m + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-acc / ExactRat(m + 1));
  }
  return g_bernoulli[n];
}

unsigned PartitionSolution::parts() const {
  unsigned s = 0;
  for (unsigned v : b) s += v;
  return s;
}

unsigned PartitionSolution::weight() const {
  unsigned s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += static_cast<unsigned>(i + 1) * b[i];
  return s;
}

std::vector<PartitionSolution> enumerate_h_solutions(unsigned r) {
  std::vector<PartitionSolution> out;
  if (r == 0) {
    out.push_back({});
    return out;
  }
  std::vector<unsigned> b(r + 1, 0);
  enumerate(r, 1, r, 2 * r, b, out);
  return out;
}

ExactInt h_weight(const PartitionSolution& sol) {
  unsigned r = sol.parts();
  unsigned b1 = sol.b.empty() ? 0 : sol.b[0];
  ExactInt num = factorial(r - b1);
  for (std::size_t i = 1; i < sol.b.size(); ++i) num /= factorial(sol.b[i]);
  return num;
}

KernelSequence<ExactRat> stirling_kernel(unsigned z, std::size_t length) {
  std::vector<ExactRat> terms;
  terms.reserve(length);
  for (std::size_t i = 1; i <= length; ++i) terms.emplace_back(stirling_first(z, static_cast<unsigned>(i)));
  return KernelSequence<ExactRat>(std::move(terms));
}

std::vector<ExactRat> toeplitz_inverse_oracle(const KernelSequence<ExactRat>& s, unsigned n) {
  if (n == 0) throw DomainError("dimension must be positive");
  if (s(1) == 0) throw DivisionByZeroError("kernel must have s(1) != 0");
  using Matrix = Eigen::Matrix<ExactRat, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<ExactRat, Eigen::Dynamic, 1>;
  Matrix t = Matrix::Zero(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j <= i; ++j) t(i, j) = s(i - j + 1);
  Vector e = Vector::Zero(n);
  e(0) = 1;
  Vector col = t.triangularView<Eigen::Lower>().solve(e);
  return std::vector<ExactRat>(col.data(), col.data() + n);
}

std::string to_string(const ExactRat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace psik
