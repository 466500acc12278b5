#include "psik/relations.hpp"

#include "psik/combinatorics.hpp"
#include "psik/digamma.hpp"
#include "psik/errors.hpp"
#include "psik/xi_integral.hpp"
#include "psik/zeta_engine.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <cmath>
#include <map>
#include <mutex>
#include <regex>

namespace psik {

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::string>>;

PrecReal ipow(const PrecReal& x, unsigned e) { return e == 0 ? PrecReal(1) : PrecReal(pow(x, static_cast<int>(e))); }

PrecReal fact(unsigned n) { return PrecReal(factorial(n)); }

PrecReal choose(unsigned n, unsigned k) { return PrecReal(binomial(n, k)); }

// Linear combination with its propagated bound.
struct Acc {
  PrecReal value{0};
  PrecReal bound{0};
  PrecReal scale{0};

  void add(const PrecReal& coeff, const SeriesValue<PrecReal>& v) {
    PrecReal t = coeff * v.value;
    value += t;
    bound += abs(coeff) * v.trunc_bound;
    scale += abs(t);
  }
  void add(const PrecReal& exact_term) {
    value += exact_term;
    scale += abs(exact_term);
  }
  SeriesValue<PrecReal> result(long terms = 0) const { return {value, bound + 16 * epsilon() * scale, terms}; }
};

template <class F>
RelationReport timed(F&& body) {
  auto start = Clock::now();
  RelationReport r = body();
  r.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string num(const PrecReal& x) {
  std::ostringstream os;
  os << std::setprecision(20) << x;
  return os.str();
}

std::string key_of(const PrecReal& x) { return std::to_string(current_precision_bits()) + ":" + to_string(x, current_digits() + 5); }

// log^j terms of the y-expansion tail need y large enough; the direct part
// starts at y = x.
std::vector<SeriesValue<PrecReal>> compute_phi_sums(unsigned jmax, const PrecReal& x, const TailOptions& tail) {
  auto direct = [&](long n) {
    PrecReal y = x * n;
    auto psi = psi_k_all(jmax, y);
    PrecReal L = log(y);
    std::vector<SeriesValue<PrecReal>> out;
    for (unsigned j = 0; j <= jmax; ++j) {
      PrecReal a = ipow(L, j) / (2 * y), b = ipow(L, j + 1) / (j + 1);
      PrecReal v = psi[j].value + a - b;
      PrecReal e = psi[j].trunc_bound + 4 * epsilon() * (abs(psi[j].value) + abs(a) + abs(b));
      out.push_back({v, e, 1});
    }
    return out;
  };
  auto group = [&](std::size_t j, unsigned g) {
    return g == 0 ? LogPowerGroup{} : psi_k_expansion_group(static_cast<unsigned>(j), 0, g);
  };
  return sum_with_tail(jmax + 1, direct, group, x, PrecReal(0), tail);
}

std::vector<PrecReal> stirling_weights(unsigned z, unsigned kmax) {
  // h(r)/s(z,1)^r for r = 0..kmax
  auto kernel = stirling_kernel(z, kmax + 2);
  const ExactRat s1 = kernel(1);
  std::vector<PrecReal> out;
  ExactRat p = 1;
  for (unsigned r = 0; r <= kmax; ++r) {
    out.push_back(PrecReal(h_of_r(r, kernel) / p));
    p *= s1;
  }
  return out;
}

// sum_l 2^l/(k-l)! w^{-z/2} L^{k-l} sum_r (-1)^r/(l-r)! h(r)/s1^r S_{l-r}
SeriesValue<PrecReal> weighted_stirling_combination(unsigned k, unsigned z, const PrecReal& L,
                                                    const std::vector<SeriesValue<PrecReal>>& S) {
  auto weights = stirling_weights(z, k);
  const PrecReal pre = exp(-PrecReal(z) / 2 * L);
  Acc acc;
  for (unsigned l = 0; l <= k; ++l) {
    PrecReal outer = pow(PrecReal(2), static_cast<int>(l)) / fact(k - l) * pre * ipow(L, k - l);
    for (unsigned r = 0; r <= l; ++r) {
      PrecReal c = outer * weights[r] / fact(l - r);
      if (r % 2 == 1) c = -c;
      acc.add(c, S[l - r]);
    }
  }
  return acc.result();
}

bool plain_decimal(const std::string& s) { return std::regex_match(s, std::regex(R"([+]?[0-9]+(\.[0-9]*)?|[+]?\.[0-9]+)")); }

}  // namespace

// ---- Alpha ----

Alpha::Alpha(const PrecReal& value) : value_(value) {
  if (!(value > 0)) throw DomainError("alpha must be positive");
}

Alpha::Alpha(const ExactRat& value) : value_(PrecReal(value)), exact_(value) {
  if (!(value > 0)) throw DomainError("alpha must be positive");
}

Alpha Alpha::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      ExactInt p(text.substr(0, slash)), q(text.substr(slash + 1));
      if (q == 0) throw DomainError("alpha: zero denominator");
      return Alpha(ExactRat(p, q));
    }
    if (plain_decimal(text)) {
      std::string digits = text[0] == '+' ? text.substr(1) : text;
      auto dot = digits.find('.');
      ExactInt den = 1;
      if (dot != std::string::npos) {
        std::size_t frac = digits.size() - dot - 1;
        digits.erase(dot, 1);
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
      }
      if (digits.empty()) digits = "0";
      return Alpha(ExactRat(ExactInt(digits), den));
    }
  } catch (const std::runtime_error&) {
    throw DomainError("alpha: cannot parse '" + text + "'");
  }
  return Alpha(parse_real(text));
}

Alpha Alpha::reciprocal() const {
  if (exact_) return Alpha(ExactRat(1) / *exact_);
  return Alpha(PrecReal(1 / value_));
}

PrecReal Alpha::value() const { return exact_ ? PrecReal(*exact_) : value_; }

PrecReal Alpha::log() const {
  if (!exact_) return boost::multiprecision::log(value_);
  PrecReal p = PrecReal(numerator(*exact_)), q = PrecReal(denominator(*exact_));
  return boost::multiprecision::log(p) - boost::multiprecision::log(q);
}

bool Alpha::is_one() const { return exact_ ? *exact_ == 1 : value_ == 1; }

std::string Alpha::text() const { return exact_ ? to_string(*exact_) : to_string(value_, 20); }

// ---- reports ----

RelationReport make_report(std::string name, Params params, const SeriesValue<PrecReal>& lhs,
                           const SeriesValue<PrecReal>& rhs, const PrecReal& tolerance_factor) {
  RelationReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.abs_residual = abs(lhs.value - rhs.value);
  PrecReal scale = std::max(abs(lhs.value), abs(rhs.value));
  r.rel_residual = scale > 0 ? PrecReal(r.abs_residual / scale) : PrecReal(0);
  r.error_budget = lhs.trunc_bound + rhs.trunc_bound;
  r.tolerance_factor = tolerance_factor;
  r.pass = r.abs_residual <= tolerance_factor * r.error_budget;
  r.precision_bits = current_precision_bits();
  return r;
}

// ---- digamma series ----

std::vector<SeriesValue<PrecReal>> phi_sums(unsigned jmax, const PrecReal& x, const TailOptions& tail) {
  if (!(x > 0)) throw DomainError("phi sums need x > 0");
  static std::mutex mu;
  static std::map<std::string, std::vector<SeriesValue<PrecReal>>> cache;
  const std::string key = key_of(x) + ":" + std::to_string(tail.n0) + ":" + std::to_string(tail.max_groups);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second.size() > jmax) {
      return std::vector<SeriesValue<PrecReal>>(it->second.begin(), it->second.begin() + jmax + 1);
    }
  }
  auto v = compute_phi_sums(jmax, x, tail);
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 64) cache.clear();
  auto& slot = cache[key];
  if (slot.size() < v.size()) slot = v;
  return v;
}

SeriesValue<PrecReal> eval_phi_sum(const PrecReal& x, const TailOptions& tail) { return phi_sums(0, x, tail)[0]; }

SeriesValue<PrecReal> eval_phi1_sum(const PrecReal& x, const TailOptions& tail) { return phi_sums(1, x, tail)[1]; }

SeriesValue<PrecReal> eval_phi_bracket(const Alpha& x, const TailOptions& tail) {
  const PrecReal X = x.value(), L = x.log();
  const PrecReal g = euler_gamma<PrecReal>();
  const PrecReal sx = sqrt(X);
  Acc acc;
  acc.add(sx, eval_phi_sum(X, tail));
  acc.add(sx * (g - log(2 * pi<PrecReal>()) - L) / (2 * X));
  return acc.result();
}

SeriesValue<PrecReal> eval_Fk(unsigned k, const Alpha& x, const TailOptions& tail) {
  const PrecReal X = x.value(), L = x.log(), Lh = L / 2;
  auto S = phi_sums(k, X, tail);
  auto gam = stieltjes_all(k, PrecReal(1));
  Acc acc;
  for (unsigned j = 0; j <= k; ++j) {
    PrecReal c = choose(k, j) * ipow(Lh, k - j);
    if (j % 2 == 0) c = -c;
    acc.add(c, S[j]);
    for (unsigned l = 0; l <= j; ++l) acc.add(c * choose(j, l) * ipow(L, j - l) / (2 * X), gam[l]);
    auto z0 = zeta_deriv_at_zero(j + 1);
    PrecReal d = -c / (2 * (j + 1) * X);
    acc.add(d * ipow(L, j + 1));
    acc.add(d * ((j + 1) % 2 == 0 ? 2 : -2), z0);
  }
  SeriesValue<PrecReal> inner = acc.result();
  const PrecReal sx = sqrt(X);
  return {sx * inner.value, sx * inner.trunc_bound, S[0].terms_used};
}

SeriesValue<PrecReal> eval_F1(const Alpha& x, const TailOptions& tail) {
  const PrecReal X = x.value(), L = x.log();
  const PrecReal g = euler_gamma<PrecReal>(), l2pi = log(2 * pi<PrecReal>()), pi2 = pi<PrecReal>() * pi<PrecReal>();
  auto S = phi_sums(1, X, tail);
  const PrecReal sx = sqrt(X);
  Acc acc;
  acc.add(sx, S[1]);
  acc.add(sx * (l2pi * l2pi - (g - L) * (g - L)) / (4 * X));
  acc.add(sx * pi2 / (48 * X));
  const PrecReal c = -sx * L / 2;
  acc.add(c, S[0]);
  acc.add(c * (g - l2pi - L) / (2 * X));
  return acc.result(S[0].terms_used);
}

RelationReport verify_ramanujan_k(unsigned k, const Alpha& alpha, const RelationOptions& options) {
  return timed([&] {
    auto lhs = eval_Fk(k, alpha, options.tail);
    auto rhs = alpha.is_one() ? lhs : eval_Fk(k, alpha.reciprocal(), options.tail);
    return make_report("ramanujan-k", {{"k", std::to_string(k)}, {"alpha", alpha.text()}}, lhs, rhs,
                       options.tolerance_factor);
  });
}

std::vector<RelationReport> verify_psi1(const Alpha& alpha, bool with_integral, const RelationOptions& options) {
  std::vector<RelationReport> out;
  const Params params{{"alpha", alpha.text()}};
  SeriesValue<PrecReal> f1;
  out.push_back(timed([&] {
    f1 = eval_F1(alpha, options.tail);
    auto f2 = eval_F1(alpha.reciprocal(), options.tail);
    return make_report("psi1-modular", params, f1, f2, options.tolerance_factor);
  }));
  if (!with_integral) return out;
  out.push_back(timed([&] {
    auto i1 = script_I(alpha);
    return make_report("psi1-xi", params, f1, i1, options.tolerance_factor);
  }));
  out.push_back(timed([&] {
    auto i2 = script_I(alpha.reciprocal());
    return make_report("psi1-xi-reciprocal", params, f1, i2, options.tolerance_factor);
  }));
  return out;
}

// ---- finite identities ----

namespace {

// n { sum_l (-1)^l C(k,l) log^{k-l}(n) sum_{j=1}^m psi_l(nx + n(j-1)/m) - m log^{k+1}(n)/(k+1) }
SeriesValue<PrecReal> carlitz_side(unsigned k, unsigned m, unsigned n, const PrecReal& x) {
  const PrecReal ln = log(PrecReal(n));
  std::vector<Acc> inner(k + 1);
  for (unsigned j = 1; j <= m; ++j) {
    PrecReal arg = n * x + PrecReal(n * (j - 1)) / m;
    auto psi = psi_k_all(k, arg);
    for (unsigned l = 0; l <= k; ++l) inner[l].add(PrecReal(1), psi[l]);
  }
  Acc acc;
  for (unsigned l = 0; l <= k; ++l) {
    PrecReal c = n * choose(k, l) * ipow(ln, k - l);
    if (l % 2 == 1) c = -c;
    acc.add(c, inner[l].result());
  }
  acc.add(-PrecReal(n) * m * ipow(ln, k + 1) / (k + 1));
  return acc.result();
}

SeriesValue<PrecReal> meeting_side(unsigned k, unsigned z, unsigned m, unsigned n, const PrecReal& x) {
  std::vector<Acc> inner(k + 1);
  for (unsigned j = 1; j <= m; ++j) {
    PrecReal arg = n * x + PrecReal(n * (j - 1)) / m;
    auto psi = psi_k_deriv_all(k, z - 1, arg);
    for (unsigned l = 0; l <= k; ++l) inner[l].add(PrecReal(1), psi[l]);
  }
  std::vector<SeriesValue<PrecReal>> S;
  for (auto& a : inner) S.push_back(a.result());
  const PrecReal L = log(PrecReal(m)) - log(PrecReal(n));
  return weighted_stirling_combination(k, z, L, S);
}

void check_mn(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw DomainError("m and n must be positive");
}

}  // namespace

RelationReport verify_carlitz(unsigned k, unsigned m, unsigned n, const PrecReal& x, const RelationOptions& options) {
  check_mn(m, n);
  if (!(x > 0)) throw DomainError("carlitz needs x > 0");
  return timed([&] {
    auto lhs = carlitz_side(k, m, n, x);
    auto rhs = carlitz_side(k, n, m, x);
    return make_report("carlitz",
                       {{"k", std::to_string(k)}, {"m", std::to_string(m)}, {"n", std::to_string(n)}, {"x", num(x)}},
                       lhs, rhs, options.tolerance_factor);
  });
}

RelationReport verify_carlitz_corollary(unsigned m, unsigned n, const PrecReal& x, const RelationOptions& options) {
  check_mn(m, n);
  if (!(x > 0)) throw DomainError("carlitz needs x > 0");
  auto side = [&](unsigned a, unsigned b) {
    // b [sum_{j=1}^a psi(bx + b(j-1)/a) + a log a]
    Acc acc;
    for (unsigned j = 1; j <= a; ++j) {
      PrecReal arg = b * x + PrecReal(b * (j - 1)) / a;
      acc.add(PrecReal(b), psi_k(0, arg));
    }
    acc.add(PrecReal(b) * a * log(PrecReal(a)));
    return acc.result();
  };
  return timed([&] {
    return make_report("carlitz-corollary", {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"x", num(x)}},
                       side(m, n), side(n, m), options.tolerance_factor);
  });
}

RelationReport verify_meeting(unsigned k, unsigned z, unsigned m, unsigned n, const PrecReal& x,
                              const RelationOptions& options) {
  check_mn(m, n);
  if (z < 2) throw DomainError("meeting needs integer z >= 2");
  if (!(x > 0)) throw DomainError("meeting needs x > 0");
  return timed([&] {
    auto lhs = meeting_side(k, z, m, n, x);
    auto rhs = meeting_side(k, z, n, m, x);
    return make_report("meeting",
                       {{"k", std::to_string(k)},
                        {"z", std::to_string(z)},
                        {"m", std::to_string(m)},
                        {"n", std::to_string(n)},
                        {"x", num(x)}},
                       lhs, rhs, options.tolerance_factor);
  });
}

RelationReport verify_dup1(const PrecReal& x, const RelationOptions& options) {
  if (!(x > 0)) throw DomainError("dup1 needs x > 0");
  return timed([&] {
    const PrecReal l2 = log(PrecReal(2));
    auto a = psi_k_deriv_all(1, 1, 2 * x);
    auto b = psi_k_deriv_all(1, 1, x);
    auto c = psi_k_deriv_all(1, 1, x + PrecReal("0.5"));
    Acc lhs, rhs;
    lhs.add(1 - l2 / 2, a[0]);
    lhs.add(PrecReal(1), a[1]);
    rhs.add((1 + l2 / 2) / 4, b[0]);
    rhs.add((1 + l2 / 2) / 4, c[0]);
    rhs.add(PrecReal("0.25"), b[1]);
    rhs.add(PrecReal("0.25"), c[1]);
    return make_report("dup1", {{"x", num(x)}}, lhs.result(), rhs.result(), options.tolerance_factor);
  });
}

RelationReport verify_dup2(const PrecReal& x, const RelationOptions& options) {
  if (!(x > 0)) throw DomainError("dup2 needs x > 0");
  return timed([&] {
    const PrecReal l2 = log(PrecReal(2));
    auto a = psi_k_deriv_all(2, 1, 2 * x);
    auto b = psi_k_deriv_all(2, 1, x);
    auto c = psi_k_deriv_all(2, 1, x + PrecReal("0.5"));
    const PrecReal w0 = l2 * l2 / 4 + l2 + 2, w1 = l2 + 2;
    Acc lhs, rhs;
    lhs.add(w0, b[0]);
    lhs.add(w0, c[0]);
    lhs.add(w1, b[1]);
    lhs.add(w1, c[1]);
    lhs.add(PrecReal(1), b[2]);
    lhs.add(PrecReal(1), c[2]);
    rhs.add(4 * (l2 * l2 / 4 - l2 + 2), a[0]);
    rhs.add(4 * (2 - l2), a[1]);
    rhs.add(PrecReal(4), a[2]);
    return make_report("dup2", {{"x", num(x)}}, lhs.result(), rhs.result(), options.tolerance_factor);
  });
}

// ---- infinite Guinand-type relations ----

SeriesValue<PrecReal> guinand_side(unsigned k, unsigned z, const Alpha& alpha, const TailOptions& tail) {
  if (z < 3) throw DomainError("the z >= 3 relation needs integer z >= 3");
  // S_q = sum_{j >= 1} psi_q^{(z-1)}(1 + j/alpha), y = (j + alpha)/alpha
  const Alpha inv = alpha.reciprocal();
  const PrecReal c = inv.value(), d = alpha.value();
  auto direct = [&](long j) { return psi_k_deriv_all(k, z - 1, 1 + j * c); };
  auto group = [&](std::size_t q, unsigned g) { return psi_k_expansion_group(static_cast<unsigned>(q), z - 1, g); };
  auto S = sum_with_tail(k + 1, direct, group, c, d, tail);
  return weighted_stirling_combination(k, z, alpha.log(), S);
}

RelationReport verify_guinand(unsigned k, unsigned z, const Alpha& alpha, const RelationOptions& options) {
  return timed([&] {
    auto lhs = guinand_side(k, z, alpha, options.tail);
    auto rhs = alpha.is_one() ? lhs : guinand_side(k, z, alpha.reciprocal(), options.tail);
    return make_report("guinand", {{"k", std::to_string(k)}, {"z", std::to_string(z)}, {"alpha", alpha.text()}}, lhs,
                       rhs, options.tolerance_factor);
  });
}

RelationReport verify_guigen(unsigned z, const Alpha& alpha, const RelationOptions& options) {
  if (z < 3) throw DomainError("guigen needs integer z >= 3");
  auto side = [&](const Alpha& a) {
    // a^{z/2} sum_j psi^{(z-1)}(1 + j a), y = a (j + 1/a)
    const PrecReal c = a.value(), d = a.reciprocal().value();
    auto direct = [&](long j) { return psi_k_deriv(0, z - 1, 1 + j * c); };
    auto group = [&](unsigned g) { return psi_k_expansion_group(0, z - 1, g); };
    auto S = sum_with_tail(direct, group, c, d, options.tail);
    const PrecReal pre = exp(PrecReal(z) / 2 * a.log());
    return SeriesValue<PrecReal>{pre * S.value, pre * S.trunc_bound + 16 * epsilon() * abs(pre * S.value),
                                 S.terms_used};
  };
  return timed([&] {
    return make_report("guigen", {{"z", std::to_string(z)}, {"alpha", alpha.text()}}, side(alpha),
                       side(alpha.reciprocal()), options.tolerance_factor);
  });
}

namespace {

// T_r = sum_{j >= 1} (psi_r'(1 + alpha j) - log^r(alpha j)/(alpha j)), r = 0..k
std::vector<SeriesValue<PrecReal>> regularized_derivative_sums(unsigned k, const PrecReal& a, const TailOptions& tail) {
  auto direct = [&](long j) {
    PrecReal y = a * j;
    auto psi = psi_k_deriv_all(k, 1, 1 + y);
    PrecReal L = log(y);
    std::vector<SeriesValue<PrecReal>> out;
    for (unsigned r = 0; r <= k; ++r) {
      PrecReal s = ipow(L, r) / y;
      out.push_back({psi[r].value - s, psi[r].trunc_bound + 4 * epsilon() * (abs(psi[r].value) + abs(s)), 1});
    }
    return out;
  };
  // psi_r'(1 + y) = psi_r'(y) + (r L^{r-1} - L^r)/y^2
  auto group = [&](std::size_t rr, unsigned g) {
    const unsigned r = static_cast<unsigned>(rr);
    LogPowerGroup grp = psi_k_expansion_group(r, 1, g);
    if (g == 0) {
      LogPowerTerm lead{PrecReal(1), std::vector<PrecReal>(r + 1, PrecReal(0))};
      lead.poly[r] = -1;
      LogPowerTerm shift{PrecReal(2), std::vector<PrecReal>(r + 1, PrecReal(0))};
      shift.poly[r] = -1;
      if (r > 0) shift.poly[r - 1] = r;
      grp.push_back(lead);
      grp.push_back(shift);
    }
    return simplify(grp);
  };
  return sum_with_tail(k + 1, direct, group, a, PrecReal(0), tail);
}

}  // namespace

SeriesValue<PrecReal> curious_side(unsigned k, const Alpha& alpha, const TailOptions& tail) {
  const PrecReal a = alpha.value(), L = alpha.log();
  auto T = regularized_derivative_sums(k, a, tail);
  auto gam = stieltjes_all(k, PrecReal(1));
  Acc acc;
  for (unsigned l = 0; l <= k; ++l) {
    SeriesValue<PrecReal> al = gam[l];
    if (l == 0) al.value -= 1;
    for (unsigned r = 0; r + l <= k; ++r) {
      const PrecReal w = 1 / (fact(l) * fact(r));
      PrecReal c = w * pow(PrecReal(2), static_cast<int>(k - l)) * a * ipow(L, l);
      if (l % 2 == 1) c = -c;
      acc.add(c, T[r]);
      acc.add(w * pow(PrecReal(2), static_cast<int>(k - r)) * ipow(L, r), al);
    }
  }
  acc.add(-ipow(L, k + 1) / (2 * fact(k + 1)));
  return acc.result(T[0].terms_used);
}

RelationReport verify_curious(unsigned k, const Alpha& alpha, const RelationOptions& options) {
  return timed([&] {
    auto lhs = curious_side(k, alpha, options.tail);
    auto rhs = alpha.is_one() ? lhs : curious_side(k, alpha.reciprocal(), options.tail);
    return make_report("curious", {{"k", std::to_string(k)}, {"alpha", alpha.text()}}, lhs, rhs,
                       options.tolerance_factor);
  });
}

RelationReport verify_guigen1(const Alpha& alpha, const RelationOptions& options) {
  auto side = [&](const Alpha& a) {
    auto T = regularized_derivative_sums(0, a.value(), options.tail);
    Acc acc;
    acc.add(a.value(), T[0]);
    acc.add(-a.log() / 2);
    return acc.result(T[0].terms_used);
  };
  return timed([&] {
    return make_report("guigen1", {{"alpha", alpha.text()}}, side(alpha), side(alpha.reciprocal()),
                       options.tolerance_factor);
  });
}

// ---- summatory log sums ----

RelationReport summatory_log_check(unsigned j, long x, const PrecReal& y, const RelationOptions& options) {
  if (x < 10) throw DomainError("summatory check needs x >= 10");
  if (!(y > 0)) throw DomainError("summatory check needs y > 0");
  return timed([&] {
    auto gam = stieltjes_all(j, PrecReal(1));
    const PrecReal ly = log(y);
    auto main_terms = [&](long X) {
      const PrecReal lx = log(PrecReal(X));
      PrecReal m = 0;
      for (unsigned t = 0; t <= j; ++t) {
        m += choose(j, t) * ipow(ly, j - t) * (ipow(lx, t + 1) / (t + 1) + gam[t].value);
      }
      return m;
    };
    PrecReal sum = 0, sum_at_x = 0, sumabs = 0;
    std::vector<PrecReal> scaled;
    const long checkpoints[3] = {x, 2 * x, 4 * x};
    int next = 0;
    for (long n = 1; n <= 4 * x; ++n) {
      PrecReal t = ipow(log(y * n), j) / n;
      sum += t;
      sumabs += abs(t);
      if (n == checkpoints[next]) {
        if (next == 0) sum_at_x = sum;
        const PrecReal lx = log(PrecReal(n));
        scaled.push_back(abs(sum - main_terms(n)) * n / ipow(lx, j));
        ++next;
      }
    }
    const PrecReal C = scaled[0];
    const PrecReal lx = log(PrecReal(x));
    SeriesValue<PrecReal> lhs{sum_at_x, 16 * epsilon() * sumabs, x};
    SeriesValue<PrecReal> rhs{main_terms(x), 2 * C * ipow(lx, j) / x, 0};
    RelationReport r = make_report("summatory", {{"j", std::to_string(j)}, {"x", std::to_string(x)}, {"y", num(y)}},
                                   lhs, rhs, options.tolerance_factor);
    r.pass = scaled[1] <= 2 * C && scaled[2] <= 2 * C;
    r.note = "scaled residuals " + to_string(scaled[0], 6) + " " + to_string(scaled[1], 6) + " " +
             to_string(scaled[2], 6);
    return r;
  });
}

RelationReport verify_inv6(unsigned n, unsigned l, const PrecReal& x, const RelationOptions& options) {
  if (n < 2) throw DomainError("inv6 needs integer n >= 2");
  if (!(x > 0)) throw DomainError("inv6 needs x > 0");
  return timed([&] {
    auto psis = psi_k_deriv_all(l, n - 1, x);
    std::vector<PrecReal> vals;
    for (const auto& p : psis) vals.push_back(p.value);
    PrecReal rebuilt = inv6_reconstruct(n, vals)[l];
    auto weights = stirling_weights(n, l);
    const PrecReal s1 = PrecReal(stirling_first(n, 1));
    PrecReal bound = 0, scale = 0;
    for (unsigned r = 0; r <= l; ++r) {
      PrecReal c = abs(fact(l) / fact(l - r) * weights[r] / s1);
      bound += c * psis[l - r].trunc_bound;
      scale += c * abs(psis[l - r].value);
    }
    SeriesValue<PrecReal> lhs{rebuilt, bound + 16 * epsilon() * scale, 0};
    auto rhs = hurwitz_deriv(l, PrecReal(n), x);
    return make_report("inv6", {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"x", num(x)}}, lhs, rhs,
                       options.tolerance_factor);
  });
}

SeriesValue<PrecReal> gamma1_odd_zeta_series() {
  PrecReal sum = 0, bound = 0;
  const PrecReal eps = epsilon();
  for (unsigned j = 1; j < 100000; ++j) {
    auto d = hurwitz_deriv(1, PrecReal(2 * j + 1), PrecReal(1));
    PrecReal t = d.value / (2 * j + 1);
    sum += t;
    bound += d.trunc_bound / (2 * j + 1);
    // consecutive terms shrink by about 1/4, so the tail is below the last term
    if (abs(t) <= eps * abs(sum)) return {sum, bound + abs(t) + 16 * eps * abs(sum), static_cast<long>(j)};
  }
  throw BudgetExceeded("odd zeta series for gamma_1 did not converge");
}

}  // namespace psik
