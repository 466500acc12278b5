#include "psik/zeta_engine.hpp"

#include "psik/combinatorics.hpp"
#include "psik/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <map>
#include <mutex>

namespace psik {

namespace {

constexpr long kMaxShift = 4'000'000;

struct BernoulliTables {
  std::vector<PrecReal> scaled;  // B_{2j}/(2j)!
  std::vector<PrecReal> plain;   // B_{2j}
};

std::mutex g_bern_mutex;
std::map<unsigned, std::shared_ptr<const BernoulliTables>> g_bern_cache;

std::shared_ptr<const BernoulliTables> bernoulli_tables(unsigned count) {
  const unsigned bits = current_precision_bits();
  std::lock_guard<std::mutex> lock(g_bern_mutex);
  auto& slot = g_bern_cache[bits];
  if (!slot || slot->scaled.size() < count) {
    auto t = std::make_shared<BernoulliTables>();
    unsigned n = std::max(count, 64u);
    for (unsigned j = 0; j < n; ++j) {
      ExactRat b = bernoulli(2 * j);
      t->plain.push_back(PrecReal(b));
      t->scaled.push_back(PrecReal(b / ExactRat(factorial(2 * j))));
    }
    slot = std::move(t);
  }
  return slot;
}

// y^{-z0} = exp(-z0 log y) given L = log y, and its modulus.
std::pair<PrecReal, PrecReal> pow_neg(const PrecReal& L, const PrecReal& z0) {
  PrecReal v = exp(-z0 * L);
  return {v, abs(v)};
}

std::pair<PrecComplex, PrecReal> pow_neg(const PrecReal& L, const PrecComplex& z0) {
  PrecReal m = exp(-z0.re * L);
  PrecReal ang = -z0.im * L;
  return {PrecComplex(m * cos(ang), m * sin(ang)), m};
}

bool is_one(const PrecReal& z) { return z == 1; }
bool is_one(const PrecComplex& z) { return z.re == 1 && z.im == 0; }

template <class S>
HurwitzJet<S> hurwitz_jet_impl(std::size_t order, const S& z0, const PrecReal& x, bool subtract_pole) {
  if (order == 0) throw DomainError("jet order must be positive");
  if (!(x > 0)) throw DomainError("Hurwitz zeta needs x > 0");
  if (subtract_pole && !is_one(z0)) throw DomainError("pole subtraction is only defined at z = 1");
  if (!subtract_pole && is_one(z0)) throw PoleError("zeta(z, x) has a pole at z = 1");

  const unsigned digits = current_digits();
  const PrecReal eps = epsilon();
  const unsigned cap = std::max(60u, digits);
  auto bern = bernoulli_tables(cap + 2);
  const double zabs = static_cast<double>(magnitude(z0));
  double a_target = std::max(10.0, zabs + 0.7 * digits) + static_cast<double>(order);

  for (int attempt = 0; attempt < 6; ++attempt, a_target *= 1.6) {
    double xd = static_cast<double>(x);
    long M = std::max(0L, static_cast<long>(std::ceil(a_target - xd)));
    if (M > kMaxShift) throw BudgetExceeded("Hurwitz zeta: shift exceeds the term budget");

    Jet<S> sum(order);
    std::vector<PrecReal> sumabs(order, PrecReal(0));
    for (long n = 0; n < M; ++n) {
      PrecReal y = x + n;
      PrecReal L = log(y);
      auto [t, tm] = pow_neg(L, z0);
      PrecReal lp = 1;  // L^p / p!
      for (std::size_t p = 0; p < order; ++p) {
        if (p > 0) lp = lp * L / static_cast<int>(p);
        if (p % 2 == 0) sum[p] += t * lp; else sum[p] -= t * lp;
        sumabs[p] += tm * abs(lp);
      }
    }

    PrecReal a = x + M;
    PrecReal La = log(a);
    auto [ta, tam] = pow_neg(La, z0);
    Jet<S> E = Jet<S>::exp_linear(order, PrecReal(-La));

    Jet<S> tail(order);
    if (subtract_pole) {
      PrecReal c = -La;
      for (std::size_t p = 0; p < order; ++p) {
        tail[p] += S(c);
        c = c * (-La) / static_cast<int>(p + 2);
      }
    } else {
      Jet<S> inv(order);
      S d = z0 - S(PrecReal(1));
      S dinv = S(PrecReal(1)) / d;
      S pw = dinv;
      for (std::size_t p = 0; p < order; ++p) {
        inv[p] = (p % 2 == 0) ? pw : S(-pw);
        pw *= dinv;
      }
      Jet<S> pole = E * inv;
      pole *= S(ta * a);
      tail += pole;
    }
    tail.add_scaled(S(ta / PrecReal(2)), E);
    for (std::size_t p = 0; p < order; ++p) sumabs[p] += magnitude(tail[p]);

    Jet<S> P = Jet<S>::variable(order, z0);
    PrecReal apow = 1 / a;
    PrecReal a2inv = apow * apow;
    bool converged = false;
    bool diverged = false;
    PrecReal prev_size = -1;
    std::vector<PrecReal> last(order, PrecReal(0));
    unsigned j = 1;
    for (; j <= cap; ++j) {
      Jet<S> inc = P;
      inc *= bern->scaled[j] * apow;
      Jet<S> term = inc * E;
      term *= ta;
      tail += term;
      PrecReal size = 0;
      converged = true;
      for (std::size_t p = 0; p < order; ++p) {
        last[p] = magnitude(term[p]);
        size = std::max(size, last[p]);
        PrecReal scale = magnitude(sum[p] + tail[p]) + sumabs[p];
        if (last[p] > eps * scale) converged = false;
      }
      if (converged) break;
      if (prev_size >= 0 && size > prev_size && j > 4) {
        diverged = true;
        break;
      }
      prev_size = size;
      P.mul_linear(z0 + S(PrecReal(2 * j - 1)));
      P.mul_linear(z0 + S(PrecReal(2 * j)));
      apow *= a2inv;
    }
    if (diverged || !converged) continue;

    HurwitzJet<S> out;
    out.jet = sum + tail;
    out.err.resize(order);
    for (std::size_t p = 0; p < order; ++p) out.err[p] = last[p] + 16 * eps * sumabs[p];
    out.terms_used = M + static_cast<long>(j);
    return out;
  }
  throw BudgetExceeded("Hurwitz zeta: Euler-Maclaurin tail did not converge");
}

bool is_nonpositive_integer(const PrecComplex& s) {
  return s.im == 0 && s.re <= 0 && s.re == floor(s.re);
}

// Upward shift count so that |s + n| is large enough for the asymptotic series.
long gamma_shift(const PrecComplex& s) {
  double w = 0.5 * current_digits() + 10;
  double re = static_cast<double>(s.re);
  double im = static_cast<double>(s.im);
  if (std::abs(im) >= w) return 0;
  double need = std::sqrt(w * w - im * im) - re;
  return need > 0 ? static_cast<long>(std::ceil(need)) : 0;
}

struct NodeValues {
  std::vector<PrecComplex> f;
  PrecReal fmax{0};
};

std::mutex g_node_mutex;
std::deque<std::pair<std::string, std::shared_ptr<const NodeValues>>> g_node_cache;

struct CauchyResult {
  std::vector<PrecComplex> coeff;
  std::vector<PrecReal> err;
};

CauchyResult cauchy_coefficients(unsigned rmax, const PrecComplex& z0, const PrecReal& x,
                                 const PrecReal& radius, bool subtract_pole) {
  if (!(radius > 0)) throw DomainError("contour radius must be positive");
  const PrecComplex one(PrecReal(1));
  if (!subtract_pole && abs(z0 - one) <= radius) {
    throw PoleError("contour encloses the pole of zeta at z = 1");
  }
  const unsigned digits = current_digits();
  unsigned N = std::max(4 * digits, 2 * rmax + 16);
  N += N % 2;
  const bool real_center = z0.im == 0;
  const PrecReal two_pi = 2 * pi<PrecReal>();

  std::vector<PrecComplex> unit(N);
  for (unsigned k = 0; k < N; ++k) {
    PrecReal th = two_pi * k / N;
    unit[k] = PrecComplex(cos(th), sin(th));
  }

  const std::string key = to_string(z0.re, 80) + ',' + to_string(z0.im, 80) + ',' + to_string(x, 80) + ',' +
                          to_string(radius, 80) + ',' + (subtract_pole ? '1' : '0') + ',' +
                          std::to_string(current_precision_bits()) + ',' + std::to_string(N);
  std::shared_ptr<const NodeValues> nodes;
  {
    std::lock_guard<std::mutex> lock(g_node_mutex);
    for (const auto& [k, v] : g_node_cache)
      if (k == key) nodes = v;
  }
  if (!nodes) {
    auto fresh = std::make_shared<NodeValues>();
    fresh->f.resize(N);
    for (unsigned k = 0; k < N; ++k) {
      if (real_center && k > N / 2) {
        fresh->f[k] = conj(fresh->f[N - k]);
        continue;
      }
      PrecComplex z = z0 + unit[k] * radius;
      PrecComplex v = hurwitz_jet(1, z, x).jet[0];
      if (subtract_pole) v -= one / (z - one);
      fresh->f[k] = v;
      fresh->fmax = std::max(fresh->fmax, abs(v));
    }
    std::lock_guard<std::mutex> lock(g_node_mutex);
    g_node_cache.emplace_back(key, fresh);
    if (g_node_cache.size() > 16) g_node_cache.pop_front();
    nodes = fresh;
  }
  const auto& f = nodes->f;
  const PrecReal& fmax = nodes->fmax;

  CauchyResult out;
  const PrecReal eps = epsilon();
  PrecReal rho_pow = 1;
  for (unsigned r = 0; r <= rmax; ++r) {
    PrecComplex full(0), half(0);
    for (unsigned k = 0; k < N; ++k) {
      // e^{-i r theta_k}
      PrecComplex w = conj(unit[(static_cast<unsigned long>(r) * k) % N]);
      PrecComplex t = f[k] * w;
      full += t;
      if (k % 2 == 0) half += t;
    }
    full /= PrecReal(N) * rho_pow;
    half /= PrecReal(N / 2) * rho_pow;
    out.coeff.push_back(full);
    out.err.push_back(abs(full - half) + 32 * eps * fmax / rho_pow);
    rho_pow *= radius;
  }
  return out;
}

std::mutex g_zero_mutex;
std::map<unsigned, std::vector<SeriesValue<PrecReal>>> g_zero_cache;

}  // namespace

std::shared_ptr<const std::vector<PrecReal>> bernoulli_scaled(unsigned count) {
  auto t = bernoulli_tables(count);
  return std::shared_ptr<const std::vector<PrecReal>>(t, &t->scaled);
}

HurwitzJet<PrecReal> hurwitz_jet(std::size_t order, const PrecReal& z0, const PrecReal& x,
                                 bool subtract_pole) {
  return hurwitz_jet_impl<PrecReal>(order, z0, x, subtract_pole);
}

HurwitzJet<PrecComplex> hurwitz_jet(std::size_t order, const PrecComplex& z0, const PrecReal& x,
                                    bool subtract_pole) {
  if (z0.im == 0) {
    auto r = hurwitz_jet_impl<PrecReal>(order, z0.re, x, subtract_pole);
    HurwitzJet<PrecComplex> out;
    out.jet = Jet<PrecComplex>(order);
    for (std::size_t p = 0; p < order; ++p) out.jet[p] = PrecComplex(r.jet[p]);
    out.err = std::move(r.err);
    out.terms_used = r.terms_used;
    return out;
  }
  return hurwitz_jet_impl<PrecComplex>(order, z0, x, subtract_pole);
}

SeriesValue<PrecReal> hurwitz_deriv(unsigned r, const PrecReal& z, const PrecReal& x) {
  auto j = hurwitz_jet(r + 1, z, x);
  PrecReal f = PrecReal(factorial(r));
  return {j.jet[r] * f, j.err[r] * f, j.terms_used};
}

SeriesValue<PrecComplex> hurwitz_deriv(unsigned r, const PrecComplex& z, const PrecReal& x) {
  auto j = hurwitz_jet(r + 1, z, x);
  PrecReal f = PrecReal(factorial(r));
  return {j.jet[r] * f, j.err[r] * f, j.terms_used};
}

std::vector<PrecReal> hurwitz_derivs(unsigned rmax, const PrecReal& z, const PrecReal& x) {
  auto j = hurwitz_jet(rmax + 1, z, x);
  std::vector<PrecReal> out;
  PrecReal f = 1;
  for (unsigned r = 0; r <= rmax; ++r) {
    if (r > 0) f *= r;
    out.push_back(j.jet[r] * f);
  }
  return out;
}

PrecComplex riemann_zeta(const PrecComplex& s) { return hurwitz_jet(1, s, PrecReal(1)).jet[0]; }

SeriesValue<PrecComplex> zeta_deriv_cauchy(unsigned r, const PrecComplex& z0, const PrecReal& x,
                                           const PrecReal& radius) {
  auto c = cauchy_coefficients(r, z0, x, radius, false);
  PrecReal f = PrecReal(factorial(r));
  return {c.coeff[r] * f, c.err[r] * f, static_cast<long>(4 * current_digits())};
}

std::vector<SeriesValue<PrecReal>> stieltjes_all(unsigned kmax, const PrecReal& x) {
  auto j = hurwitz_jet(kmax + 1, PrecReal(1), x, true);
  std::vector<SeriesValue<PrecReal>> out;
  PrecReal f = 1;
  for (unsigned k = 0; k <= kmax; ++k) {
    if (k > 0) f *= k;
    PrecReal v = j.jet[k] * f;
    out.push_back({k % 2 == 0 ? v : PrecReal(-v), j.err[k] * f, j.terms_used});
  }
  return out;
}

SeriesValue<PrecReal> stieltjes_series(unsigned k, const PrecReal& x) { return stieltjes_all(k, x)[k]; }

PrecReal stieltjes(unsigned k, const PrecReal& x) { return stieltjes_series(k, x).value; }

SeriesValue<PrecReal> stieltjes_cauchy(unsigned k, const PrecReal& x) {
  if (!(x > 0)) throw DomainError("Stieltjes constants need x > 0");
  auto c = cauchy_coefficients(k, PrecComplex(PrecReal(1)), x, PrecReal("0.5"), true);
  PrecReal f = PrecReal(factorial(k));
  PrecReal v = c.coeff[k].re * f;
  return {k % 2 == 0 ? v : PrecReal(-v), c.err[k] * f, static_cast<long>(4 * current_digits())};
}

SeriesValue<PrecReal> zeta_deriv_at_zero(unsigned k) {
  const unsigned bits = current_precision_bits();
  {
    std::lock_guard<std::mutex> lock(g_zero_mutex);
    auto it = g_zero_cache.find(bits);
    if (it != g_zero_cache.end() && it->second.size() > k) return it->second[k];
  }
  unsigned rmax = std::max(k, 8u);
  auto c = cauchy_coefficients(rmax, PrecComplex(PrecReal(0)), PrecReal(1), PrecReal("0.5"), false);
  std::vector<SeriesValue<PrecReal>> values;
  PrecReal f = 1;
  for (unsigned r = 0; r <= rmax; ++r) {
    if (r > 0) f *= r;
    values.push_back({c.coeff[r].re * f, c.err[r] * f, static_cast<long>(4 * current_digits())});
  }
  std::lock_guard<std::mutex> lock(g_zero_mutex);
  auto& slot = g_zero_cache[bits];
  if (slot.size() < values.size()) slot = values;
  return slot[k];
}

PrecComplex log_gamma_complex(const PrecComplex& s) {
  if (is_nonpositive_integer(s)) throw PoleError("Gamma has a pole at non-positive integers");
  long n = gamma_shift(s);
  PrecComplex w = s + PrecReal(n);
  const PrecReal eps = epsilon();
  const unsigned cap = std::max(60u, current_digits());
  auto bern = bernoulli_tables(cap + 2);
  PrecComplex lw = log(w);
  PrecComplex result = (w - PrecReal("0.5")) * lw - w + log(2 * pi<PrecReal>()) / 2;
  PrecComplex winv = PrecReal(1) / w;
  PrecComplex w2inv = winv * winv;
  PrecComplex pw = winv;
  bool converged = false;
  for (unsigned k = 1; k <= cap; ++k) {
    PrecComplex t = pw * (bern->plain[k] / PrecReal(2 * k * (2 * k - 1)));
    result += t;
    if (abs(t) <= eps * abs(result)) {
      converged = true;
      break;
    }
    pw *= w2inv;
  }
  if (!converged) throw BudgetExceeded("log Gamma: Stirling series did not converge");
  for (long k = 0; k < n; ++k) result -= log(s + PrecReal(k));
  return result;
}

PrecComplex gamma_complex(const PrecComplex& s) {
  if (is_nonpositive_integer(s)) throw PoleError("Gamma has a pole at non-positive integers");
  long n = gamma_shift(s);
  PrecComplex w = s + PrecReal(n);
  PrecComplex lg = log_gamma_complex(w);
  PrecComplex prod(PrecReal(1));
  for (long k = 0; k < n; ++k) prod *= s + PrecReal(k);
  return exp(lg) / prod;
}

PrecComplex digamma_complex(const PrecComplex& s) {
  if (is_nonpositive_integer(s)) throw PoleError("digamma has a pole at non-positive integers");
  long n = gamma_shift(s);
  PrecComplex w = s + PrecReal(n);
  const PrecReal eps = epsilon();
  const unsigned cap = std::max(60u, current_digits());
  auto bern = bernoulli_tables(cap + 2);
  PrecComplex winv = PrecReal(1) / w;
  PrecComplex w2inv = winv * winv;
  PrecComplex result = log(w) - winv / PrecReal(2);
  PrecComplex pw = w2inv;
  bool converged = false;
  for (unsigned k = 1; k <= cap; ++k) {
    PrecComplex t = pw * (bern->plain[k] / PrecReal(2 * k));
    result -= t;
    if (abs(t) <= eps * abs(result)) {
      converged = true;
      break;
    }
    pw *= w2inv;
  }
  if (!converged) throw BudgetExceeded("digamma: asymptotic series did not converge");
  for (long k = 0; k < n; ++k) result -= PrecReal(1) / (s + PrecReal(k));
  return result;
}

PrecReal gamma_real(const PrecReal& x) { return gamma_complex(PrecComplex(x)).re; }

PrecReal digamma_real(const PrecReal& x) { return digamma_complex(PrecComplex(x)).re; }

}  // namespace psik
