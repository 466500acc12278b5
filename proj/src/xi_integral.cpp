#include "psik/xi_integral.hpp"

#include "psik/errors.hpp"
#include "psik/log_power_tail.hpp"

#include <chrono>
#include <map>
#include <mutex>

namespace psik {

namespace {

PrecComplex cplx(const PrecReal& re, const PrecReal& im = PrecReal(0)) { return PrecComplex(re, im); }

PrecReal noise_floor() { return pow(PrecReal(10), -(static_cast<int>(current_digits()) - 8)); }

struct XiParts {
  PrecComplex value;
  PrecComplex zeta;
  PrecComplex gamma;
  PrecReal magnitude;
};

// xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s)
XiParts xi_parts(const PrecComplex& s) {
  PrecComplex half = s / PrecReal(2);
  PrecComplex g = gamma_complex(half);
  PrecComplex z = riemann_zeta(s);
  PrecComplex pref = s * (s - PrecReal(1)) / PrecReal(2) * exp(-half * PrecReal(log(pi<PrecReal>())));
  return {pref * g * z, z, g, abs(pref) * abs(g) * std::max(PrecReal(abs(z)), PrecReal(1))};
}

// Memo of integrand values keyed by precision, family and node.
class NodeCache {
 public:
  template <class F>
  PrecReal get(const std::string& family, const PrecReal& t, F&& compute) {
    const std::string key = std::to_string(current_precision_bits()) + "|" + family + "|" + to_string(t, current_digits() + 8);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    PrecReal v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    if (values_.size() > 200000) values_.clear();
    values_.emplace(key, v);
    return v;
  }

 private:
  std::mutex mu_;
  std::map<std::string, PrecReal> values_;
};

NodeCache& node_cache() {
  static NodeCache cache;
  return cache;
}

PrecReal real_checked(const PrecComplex& v, const PrecReal& magnitude, const char* what) {
  if (abs(v.im) > noise_floor() * std::max(magnitude, PrecReal(abs(v)))) {
    throw NoiseFloorExceeded(std::string(what) + ": imaginary part above noise floor");
  }
  return v.re;
}

// omega(z, t) for real z, with the reality check
PrecReal omega_real(const PrecReal& z, const PrecReal& t) {
  const PrecComplex zc = cplx(z);
  const PrecComplex a = cplx((z - 2) / 4, t / 4), b = cplx((z - 2) / 4, -t / 4);
  PrecComplex ga = gamma_complex(a), gb = gamma_complex(b);
  // Xi((t +- i(z-1))/2) = xi(1/2 + i(t +- i(z-1))/2)
  XiParts x1 = xi_parts(cplx(PrecReal("0.5") - (z - 1) / 2, t / 2));
  XiParts x2 = xi_parts(cplx(PrecReal("0.5") + (z - 1) / 2, t / 2));
  PrecComplex den = zc * zc + cplx(t * t);
  PrecComplex v = ga * gb * x1.value * x2.value / den;
  PrecReal mag = abs(ga) * abs(gb) * x1.magnitude * x2.magnitude / abs(den);
  return real_checked(v, mag, "omega");
}

// |Gamma((-1+it)/4) Xi(t/2)|^2 {2 Re psi((-1+it)/4) - 8/(1+t^2) + 2 log(4 pi) + 4 gamma} / (1+t^2)
PrecReal script_integrand(const PrecReal& t) {
  const PrecComplex w = cplx(PrecReal("-0.25"), t / 4);
  PrecReal g2 = norm(gamma_complex(w));
  PrecReal xi = xi_of(t / 2);
  PrecReal q = 1 + t * t;
  PrecReal bracket = 2 * digamma_complex(w).re - 8 / q + 2 * log(4 * pi<PrecReal>()) + 4 * euler_gamma<PrecReal>();
  return g2 * xi * xi * bracket / q;
}

QuadratureOptions with_power(QuadratureOptions q, int power) {
  q.decay_power = power;
  return q;
}

struct ZetaData {
  PrecReal zeta;
  PrecReal ratio;  // zeta'/zeta
};

ZetaData zeta_at_even(unsigned n) {
  auto d = hurwitz_derivs(1, PrecReal(n), PrecReal(1));
  return {d[0], d[1] / d[0]};
}

}  // namespace

XiPoint xi_point(const PrecReal& t) {
  XiParts p = xi_parts(cplx(PrecReal("0.5"), t));
  PrecReal v = real_checked(p.value, p.magnitude, "Xi");
  return {t, v, p.zeta, p.gamma};
}

PrecReal xi_of(const PrecReal& t) { return xi_point(t).xi_val; }

PrecComplex xi_complex(const PrecComplex& w) {
  return xi_parts(cplx(PrecReal("0.5") - w.im, w.re)).value;
}

PrecComplex omega(const PrecComplex& z, const PrecReal& t) {
  const PrecComplex it = cplx(PrecReal(0), t);
  PrecComplex ga = gamma_complex((z - PrecReal(2) + it) / PrecReal(4));
  PrecComplex gb = gamma_complex((z - PrecReal(2) - it) / PrecReal(4));
  const PrecComplex shift = (z - PrecReal(1)) * cplx(PrecReal(0), PrecReal(1));
  PrecComplex x1 = xi_complex((cplx(t) + shift) / PrecReal(2));
  PrecComplex x2 = xi_complex((cplx(t) - shift) / PrecReal(2));
  return ga * gb * x1 * x2 / (z * z + cplx(t * t));
}

SeriesValue<PrecReal> integral_I(const PrecReal& z, const Alpha& alpha, const QuadratureOptions& options) {
  if (!(z > 0 && z < 2)) throw DomainError("integral_I needs 0 < z < 2");
  const PrecReal half_log = alpha.log() / 2;
  const std::string family = "omega:" + to_string(z, current_digits());
  auto f = [&](const PrecReal& t) {
    PrecReal base = node_cache().get(family, t, [&] { return omega_real(z, t); });
    return PrecReal(base * cos(t * half_log));
  };
  return integrate_to_infinity(f, with_power(options, 3));
}

SeriesValue<PrecReal> integral_J(const PrecReal& z, const Alpha& alpha, const QuadratureOptions& options) {
  auto I = integral_I(z, alpha, options);
  PrecReal c = 8 * pow(4 * pi<PrecReal>(), (z - 4) / 2) / gamma_real(z);
  return {c * I.value, abs(c) * I.trunc_bound + 16 * epsilon() * abs(c * I.value), I.terms_used};
}

SeriesValue<PrecReal> ramanujan_integral(const Alpha& alpha, const QuadratureOptions& options) {
  auto I = integral_I(PrecReal(1), alpha, options);
  PrecReal c = -1 / pow(pi<PrecReal>(), PrecReal("1.5"));
  return {c * I.value, abs(c) * I.trunc_bound + 16 * epsilon() * abs(c * I.value), I.terms_used};
}

SeriesValue<PrecReal> script_I(const Alpha& alpha, const QuadratureOptions& options) {
  const PrecReal half_log = alpha.log() / 2;
  auto f = [&](const PrecReal& t) {
    PrecReal base = node_cache().get("script", t, [&] { return script_integrand(t); });
    return PrecReal(base * cos(t * half_log));
  };
  auto I = integrate_to_infinity(f, with_power(options, 3));
  PrecReal c = 2 / pow(4 * pi<PrecReal>(), PrecReal("1.5"));
  return {c * I.value, c * I.trunc_bound + 16 * epsilon() * abs(c * I.value), I.terms_used};
}

namespace {

// 2 (-1)^m Gamma(2m+2) zeta^2(2m+2) / scale^{2m+2} with the bracket supplied
PrecReal even_zeta_term(unsigned m, const PrecReal& scale, const PrecReal& shift_log, bool with_log) {
  ZetaData zd = zeta_at_even(2 * m + 2);
  PrecReal bracket = euler_gamma<PrecReal>() + digamma_real(PrecReal(2 * m + 2)) + zd.ratio;
  if (with_log) bracket += shift_log;
  PrecReal t = 2 * gamma_real(PrecReal(2 * m + 2)) * zd.zeta * zd.zeta / pow(scale, static_cast<int>(2 * m + 2)) * bracket;
  return m % 2 == 0 ? t : PrecReal(-t);
}

}  // namespace

SeriesValue<PrecReal> asympt_script_I(const PrecReal& alpha, unsigned M) {
  if (!(alpha > 0)) throw DomainError("alpha must be positive");
  const PrecReal g = euler_gamma<PrecReal>(), l2pi = log(2 * pi<PrecReal>()), la = log(alpha);
  const PrecReal sa = sqrt(alpha), scale = 2 * pi<PrecReal>() * alpha;
  PrecReal value = -(g + l2pi) * (g - l2pi - la) / (4 * sa) + pi<PrecReal>() * pi<PrecReal>() / (48 * sa);
  PrecReal sumabs = abs(value);
  for (unsigned m = 0; m < M; ++m) {
    PrecReal t = sa * even_zeta_term(m, scale, -la / 2, true);
    value += t;
    sumabs += abs(t);
  }
  PrecReal next = abs(sa * even_zeta_term(M, scale, -la / 2, true));
  return {value, next + 16 * epsilon() * sumabs, static_cast<long>(M)};
}

SeriesValue<PrecReal> asympt_ramanujan(const PrecReal& alpha, unsigned M) {
  if (!(alpha > 0)) throw DomainError("alpha must be positive");
  const PrecReal g = euler_gamma<PrecReal>(), sa = sqrt(alpha), scale = 2 * pi<PrecReal>() * alpha;
  auto term = [&](unsigned k) {
    PrecReal z = zeta_at_even(2 * k).zeta;
    PrecReal t = -2 * sa * gamma_real(PrecReal(2 * k)) * z * z / pow(scale, static_cast<int>(2 * k));
    return k % 2 == 0 ? t : PrecReal(-t);
  };
  PrecReal value = -sa * (g - log(scale)) / (2 * alpha);
  PrecReal sumabs = abs(value);
  for (unsigned k = 1; k <= M; ++k) {
    PrecReal t = term(k);
    value += t;
    sumabs += abs(t);
  }
  return {value, abs(term(M + 1)) + 16 * epsilon() * sumabs, static_cast<long>(M)};
}

SeriesValue<PrecReal> asympt_phi1_sum(const PrecReal& alpha, unsigned M, AsymptoticDirection direction) {
  if (!(alpha > 0)) throw DomainError("alpha must be positive");
  const PrecReal g = euler_gamma<PrecReal>(), la = log(alpha), two_pi = 2 * pi<PrecReal>();
  PrecReal value = 0;
  std::function<PrecReal(unsigned)> term;
  if (direction == AsymptoticDirection::ToInfinity) {
    term = [&](unsigned m) { return even_zeta_term(m, two_pi * alpha, -la, true); };
  } else {
    const PrecReal l2pa = log(two_pi / alpha);
    value = pi<PrecReal>() * pi<PrecReal>() / 48 * (1 - 1 / alpha) -
            (g + l2pa) * (alpha * (g - l2pa) - g + log(two_pi * alpha)) / (4 * alpha);
    term = [&](unsigned m) { return PrecReal(even_zeta_term(m, two_pi, PrecReal(0), false) * pow(alpha, static_cast<int>(2 * m + 1))); };
  }
  PrecReal sumabs = abs(value);
  for (unsigned m = 0; m < M; ++m) {
    PrecReal t = term(m);
    value += t;
    sumabs += abs(t);
  }
  return {value, abs(term(M)) + 16 * epsilon() * sumabs, static_cast<long>(M)};
}

SeriesValue<PrecReal> hurwitz_bracket(const PrecReal& z, const Alpha& alpha, const TailOptions& tail) {
  if (!(z > 0 && z < 2) || z == 1) throw DomainError("hurwitz bracket needs 0 < z < 2, z != 1");
  const PrecReal a = alpha.value();
  auto direct = [&](long n) {
    PrecReal y = a * n;
    auto h = hurwitz_deriv(0, z, y);
    PrecReal p = pow(y, -z) / 2, q = pow(y, 1 - z) / (1 - z);
    return SeriesValue<PrecReal>{h.value - p + q, h.trunc_bound + 4 * epsilon() * (abs(h.value) + abs(p) + abs(q)), 1};
  };
  auto group = [&](unsigned g) { return hurwitz_remainder_group(z, g); };
  auto S = sum_with_tail(direct, group, a, PrecReal(0), tail);
  auto zz = hurwitz_deriv(0, z, PrecReal(1));
  auto zm = hurwitz_deriv(0, z - 1, PrecReal(1));
  const PrecReal L = alpha.log();
  const PrecReal pz = exp(z * L);
  const PrecReal c1 = 1 / (2 * pz), c2 = 1 / (a * (z - 1));
  PrecReal inner = S.value - c1 * zz.value - c2 * zm.value;
  PrecReal bound = S.trunc_bound + abs(c1) * zz.trunc_bound + abs(c2) * zm.trunc_bound +
                   16 * epsilon() * (abs(S.value) + abs(c1 * zz.value) + abs(c2 * zm.value));
  const PrecReal pre = exp(z / 2 * L);
  return {pre * inner, pre * bound, S.terms_used};
}

RelationReport verify_hurwitz_integral(const PrecReal& z, const Alpha& alpha, const RelationOptions& options,
                                       const QuadratureOptions& quad) {
  auto start = std::chrono::steady_clock::now();
  auto lhs = hurwitz_bracket(z, alpha, options.tail);
  auto rhs = integral_J(z, alpha, quad);
  auto r = make_report("hurwitz-xi", {{"z", to_string(z, 20)}, {"alpha", alpha.text()}}, lhs, rhs,
                       options.tolerance_factor);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RelationReport verify_ramanujan_integral(const Alpha& alpha, const RelationOptions& options,
                                         const QuadratureOptions& quad) {
  auto start = std::chrono::steady_clock::now();
  auto lhs = eval_phi_bracket(alpha, options.tail);
  auto rhs = ramanujan_integral(alpha, quad);
  auto r = make_report("ramanujan-xi", {{"alpha", alpha.text()}}, lhs, rhs, options.tolerance_factor);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace psik
