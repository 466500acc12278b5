#include "psik/digamma.hpp"

#include "psik/combinatorics.hpp"
#include "psik/errors.hpp"
#include "psik/zeta_engine.hpp"

#include <algorithm>
#include <cmath>

namespace psik {

namespace {

// f(t) = log^k(t)/t has f^{(m)}(t) = t^{-1-m} P_m(log t). Returns P_0..P_mmax.
std::vector<std::vector<PrecReal>> log_power_derivative_polys(unsigned k, unsigned mmax) {
  std::vector<std::vector<PrecReal>> polys;
  std::vector<PrecReal> p(k + 1, PrecReal(0));
  p[k] = 1;
  polys.push_back(p);
  for (unsigned m = 0; m < mmax; ++m) {
    std::vector<PrecReal> q(k + 1, PrecReal(0));
    for (unsigned i = 0; i <= k; ++i) {
      q[i] = -PrecReal(m + 1) * p[i];
      if (i < k) q[i] += PrecReal(i + 1) * p[i + 1];
    }
    p = q;
    polys.push_back(p);
  }
  return polys;
}

PrecReal horner(const std::vector<PrecReal>& c, const PrecReal& L) {
  PrecReal v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * L + c[i];
  return v;
}

struct EmTail {
  PrecReal value;
  PrecReal err;
  PrecReal scale;
};

// sum_j B_{2j}/(2j)! [f^{(2j-1)}(b) - f^{(2j-1)}(a)] with the sign convention of
// Euler-Maclaurin for sum_{n >= a}; `b` absent when only one endpoint is used.
EmTail bernoulli_corrections(const std::vector<std::vector<PrecReal>>& polys, const PrecReal& a,
                             const PrecReal* b) {
  const PrecReal eps = epsilon();
  auto bern = bernoulli_scaled(static_cast<unsigned>(polys.size() / 2 + 2));
  PrecReal La = log(a);
  PrecReal Lb = b ? PrecReal(log(*b)) : PrecReal(0);
  EmTail out{PrecReal(0), PrecReal(0), PrecReal(0)};
  PrecReal prev = -1;
  for (unsigned j = 1; 2 * j - 1 < polys.size(); ++j) {
    const auto& P = polys[2 * j - 1];
    PrecReal d = horner(P, La) / pow(a, static_cast<int>(2 * j));
    if (b) d = horner(P, Lb) / pow(*b, static_cast<int>(2 * j)) - d;
    PrecReal term = (*bern)[j] * d;
    out.value += term;
    out.scale += abs(term);
    PrecReal size = abs(term);
    if (size <= eps * abs(out.value) || size == 0) {
      out.err = size;
      return out;
    }
    if (prev >= 0 && size > prev && j > 4) break;
    prev = size;
    out.err = size;
  }
  throw BudgetExceeded("Euler-Maclaurin correction for log-power sums did not converge");
}

unsigned em_shift(unsigned k) {
  return static_cast<unsigned>(std::ceil(10 + 0.7 * current_digits())) + k;
}

// gamma_k = lim (sum_{j <= n} log^k j / j - log^{k+1} n/(k+1)), summed directly to
// N-1 and closed with Euler-Maclaurin at N.
SeriesValue<PrecReal> stieltjes_by_limit(unsigned k) {
  const unsigned N = em_shift(k);
  const unsigned cap = std::max(60u, current_digits());
  auto polys = log_power_derivative_polys(k, 2 * cap);
  PrecReal sum = 0, sumabs = 0;
  for (unsigned j = 2; j < N; ++j) {
    PrecReal L = log(PrecReal(j));
    PrecReal t = pow(L, static_cast<int>(k)) / j;
    sum += t;
    sumabs += abs(t);
  }
  if (k == 0) {
    sum += 1;
    sumabs += 1;
  }
  PrecReal a = N;
  PrecReal La = log(a);
  PrecReal Fa = pow(La, static_cast<int>(k + 1)) / (k + 1);
  PrecReal fa = pow(La, static_cast<int>(k)) / a;
  auto em = bernoulli_corrections(polys, a, nullptr);
  PrecReal value = sum - Fa + fa / 2 - em.value;
  PrecReal err = em.err + 16 * epsilon() * (sumabs + abs(Fa) + em.scale);
  return {value, err, static_cast<long>(N)};
}

SeriesValue<PrecReal> psi_k_defining_series(unsigned k, const PrecReal& x) {
  const unsigned N = em_shift(k);
  const unsigned cap = std::max(60u, current_digits());
  auto polys = log_power_derivative_polys(k, 2 * cap);
  auto f = [&](const PrecReal& t) { return PrecReal(pow(log(t), static_cast<int>(k)) / t); };
  auto F = [&](const PrecReal& t) { return PrecReal(pow(log(t), static_cast<int>(k + 1)) / (k + 1)); };

  auto gk = stieltjes_by_limit(k);
  PrecReal value = -gk.value - f(x);
  PrecReal sumabs = abs(value);
  for (unsigned n = 1; n < N; ++n) {
    PrecReal t = f(x + n) - f(PrecReal(n));
    value -= t;
    sumabs += abs(f(x + n)) + abs(f(PrecReal(n)));
  }
  // tail sum_{n >= N} g(n), g(t) = f(t + x) - f(t)
  PrecReal a = N;
  PrecReal b = a + x;
  PrecReal integral = -(F(b) - F(a));
  PrecReal half = (f(b) - f(a)) / 2;
  auto em = bernoulli_corrections(polys, a, &b);
  PrecReal tail = integral + half - em.value;
  value -= tail;
  PrecReal err = gk.trunc_bound + em.err + 16 * epsilon() * (sumabs + abs(F(a)) + abs(F(b)) + em.scale);
  return {value, err, static_cast<long>(2 * N)};
}

}  // namespace

std::vector<SeriesValue<PrecReal>> psi_k_all(unsigned kmax, const PrecReal& x) {
  auto g = stieltjes_all(kmax, x);
  for (auto& v : g) v.value = -v.value;
  return g;
}

SeriesValue<PrecReal> psi_k(unsigned k, const PrecReal& x, PsiMethod method) {
  if (!(x > 0)) throw DomainError("psi_k needs x > 0");
  if (method == PsiMethod::DefiningSeries) return psi_k_defining_series(k, x);
  return psi_k_all(k, x)[k];
}

std::vector<SeriesValue<PrecReal>> psi_k_deriv_all(unsigned kmax, unsigned m, const PrecReal& x) {
  if (!(x > 0)) throw DomainError("psi_k derivatives need x > 0");
  if (m == 0) return psi_k_all(kmax, x);
  auto jet = hurwitz_jet(kmax + 1, PrecReal(m + 1), x);
  std::vector<SeriesValue<PrecReal>> out;
  for (unsigned k = 0; k <= kmax; ++k) {
    PrecReal v = 0, e = 0;
    for (unsigned r = 0; r <= k; ++r) {
      PrecReal s = PrecReal(stirling_first(m + 1, k - r + 1));
      if (s == 0) continue;
      PrecReal t = s * jet.jet[r];
      v += r % 2 == 0 ? t : PrecReal(-t);
      e += abs(s) * jet.err[r];
    }
    PrecReal kf = PrecReal(factorial(k));
    out.push_back({-kf * v, kf * e, jet.terms_used});
  }
  return out;
}

SeriesValue<PrecReal> psi_k_deriv(unsigned k, unsigned m, const PrecReal& x) {
  return psi_k_deriv_all(k, m, x)[k];
}

SeriesValue<PrecReal> psi_k_asymptotic(unsigned k, const PrecReal& x, unsigned terms) {
  if (x < 10) throw DomainError("the large-x expansion of psi_k needs x >= 10");
  const PrecReal L = log(x);
  auto bern = bernoulli_scaled(terms + 3);
  auto group = [&](unsigned m) {
    PrecReal inner = 0;
    for (unsigned t = 0; t <= k; ++t) {
      PrecReal s = PrecReal(stirling_first(2 * m, t + 1));
      if (s == 0) continue;
      inner += PrecReal(binomial(k, t)) * PrecReal(factorial(t)) * s * pow(L, static_cast<int>(k - t));
    }
    return PrecReal((*bern)[m] * pow(x, -2 * static_cast<int>(m)) * inner);
  };
  PrecReal value = pow(L, static_cast<int>(k + 1)) / (k + 1) - pow(L, static_cast<int>(k)) / (2 * x);
  PrecReal last = abs(value);
  for (unsigned m = 1; m <= terms; ++m) {
    PrecReal g = group(m);
    value += g;
    last = abs(g);
  }
  PrecReal next = abs(group(terms + 1));
  if (terms > 0 && next > last) throw BudgetExceeded("psi_k expansion: requested depth is past the smallest term");
  return {value, next + 16 * epsilon() * abs(value), static_cast<long>(terms)};
}

SeriesValue<PrecReal> psi_k_deriv_asymptotic(unsigned k, unsigned z, const PrecReal& x, bool with_error) {
  if (z < 2) throw DomainError("the derivative expansion needs integer z >= 2");
  if (x < 10) throw DomainError("the derivative expansion needs x >= 10");
  const PrecReal L = log(x);
  const PrecReal zr = z;
  PrecReal value = 0, next = 0;
  for (unsigned r = 0; r <= k; ++r) {
    PrecReal s = PrecReal(stirling_first(z, k - r + 1));
    if (s == 0) continue;
    PrecReal inner = 0;
    for (unsigned t = 0; t <= r; ++t) {
      inner += PrecReal(binomial(r, t)) * PrecReal(factorial(t)) / pow(zr - 1, static_cast<int>(t + 1)) *
               pow(L, static_cast<int>(r - t)) / pow(x, zr - 1);
    }
    inner += pow(L, static_cast<int>(r)) / (2 * pow(x, zr));
    PrecReal rf = PrecReal(factorial(r));
    value += s * inner / rf;
    // B_2/2! d^r/dz^r [z x^{-z-1}] = x^{-z-1} [z (-L)^r + r (-L)^{r-1}] / 12, times (-1)^r
    PrecReal g = zr * pow(L, static_cast<int>(r));
    if (r > 0) g -= PrecReal(r) * pow(L, static_cast<int>(r - 1));
    next += s * g / (12 * rf * pow(x, zr + 1));
  }
  PrecReal kf = PrecReal(factorial(k));
  value *= -kf;
  next = abs(next * kf);
  return {value, with_error ? PrecReal(next + 16 * epsilon() * abs(value)) : PrecReal(0), 2};
}

std::vector<PrecReal> inv6_reconstruct(unsigned z, const std::vector<PrecReal>& psi_derivs) {
  if (z < 2) throw DomainError("reconstruction needs integer z >= 2");
  const unsigned lmax = static_cast<unsigned>(psi_derivs.size());
  if (lmax == 0) return {};
  auto kernel = stirling_kernel(z, lmax + 1);
  const ExactRat s1 = kernel(1);
  std::vector<PrecReal> coeff;  // h(r)/s1^{r+1}
  ExactRat s1_pow = s1;
  for (unsigned r = 0; r < lmax; ++r) {
    coeff.push_back(PrecReal(h_of_r(r, kernel) / s1_pow));
    s1_pow *= s1;
  }
  std::vector<PrecReal> out;
  for (unsigned l = 0; l < lmax; ++l) {
    PrecReal v = 0;
    for (unsigned r = 0; r <= l; ++r) {
      PrecReal t = PrecReal(factorial(l)) / PrecReal(factorial(l - r)) * coeff[r] * psi_derivs[l - r];
      v += (l + r + 1) % 2 == 0 ? t : PrecReal(-t);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace psik
