#include "psik/log_power_tail.hpp"

#include "psik/combinatorics.hpp"
#include "psik/errors.hpp"
#include "psik/zeta_engine.hpp"

#include <algorithm>
#include <cmath>

namespace psik {

LogPowerTerm differentiate(const LogPowerTerm& term) {
  // d/dy y^{-w} P(log y) = y^{-w-1} (P'(L) - w P(L))
  LogPowerTerm out{term.w + 1, std::vector<PrecReal>(term.poly.size(), PrecReal(0))};
  for (std::size_t i = 0; i < term.poly.size(); ++i) {
    out.poly[i] -= term.w * term.poly[i];
    if (i > 0) out.poly[i - 1] += PrecReal(static_cast<unsigned>(i)) * term.poly[i];
  }
  return out;
}

LogPowerGroup differentiate(const LogPowerGroup& group, unsigned times) {
  LogPowerGroup g = group;
  for (unsigned t = 0; t < times; ++t) {
    for (auto& term : g) term = differentiate(term);
  }
  return simplify(g);
}

LogPowerGroup simplify(const LogPowerGroup& group) {
  LogPowerGroup out;
  for (const auto& term : group) {
    auto it = std::find_if(out.begin(), out.end(), [&](const LogPowerTerm& o) { return o.w == term.w; });
    if (it == out.end()) {
      out.push_back(term);
      continue;
    }
    if (it->poly.size() < term.poly.size()) it->poly.resize(term.poly.size(), PrecReal(0));
    for (std::size_t i = 0; i < term.poly.size(); ++i) it->poly[i] += term.poly[i];
  }
  for (auto& term : out) {
    while (!term.poly.empty() && term.poly.back() == 0) term.poly.pop_back();
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const LogPowerTerm& t) { return t.poly.empty(); }),
            out.end());
  return out;
}

PrecReal evaluate(const LogPowerGroup& group, const PrecReal& y) {
  const PrecReal L = log(y);
  PrecReal total = 0;
  for (const auto& term : group) {
    PrecReal p = 0;
    for (std::size_t i = term.poly.size(); i-- > 0;) p = p * L + term.poly[i];
    total += p * pow(y, -term.w);
  }
  return total;
}

LogPowerGroup psi_k_expansion_group(unsigned k, unsigned m, unsigned g) {
  LogPowerGroup group;
  if (g == 0) {
    LogPowerTerm lead{PrecReal(0), std::vector<PrecReal>(k + 2, PrecReal(0))};
    lead.poly[k + 1] = PrecReal(1) / (k + 1);
    LogPowerTerm half{PrecReal(1), std::vector<PrecReal>(k + 1, PrecReal(0))};
    half.poly[k] = PrecReal(-1) / 2;
    group = {lead, half};
  } else {
    auto bern = bernoulli_scaled(g + 1);
    LogPowerTerm term{PrecReal(2 * g), std::vector<PrecReal>(k + 1, PrecReal(0))};
    for (unsigned t = 0; t <= k; ++t) {
      ExactInt s = stirling_first(2 * g, t + 1);
      if (s == 0) continue;
      term.poly[k - t] = (*bern)[g] * PrecReal(binomial(k, t) * factorial(t) * s);
    }
    group = {term};
  }
  return differentiate(group, m);
}

LogPowerGroup hurwitz_remainder_group(const PrecReal& z, unsigned g) {
  if (g == 0) return {};
  auto bern = bernoulli_scaled(g + 1);
  PrecReal rising = 1;
  for (unsigned i = 0; i + 1 < 2 * g; ++i) rising *= z + i;
  return {LogPowerTerm{z + 2 * g - 1, {(*bern)[g] * rising}}};
}

PrecReal group_tail_sum(const LogPowerGroup& group, const PrecReal& c, const PrecReal& d, long j0) {
  const PrecReal a = PrecReal(j0) + d;
  const PrecReal lc = log(c);
  PrecReal total = 0;
  for (const auto& term : group) {
    if (!(term.w > 1)) throw DomainError("log-power tail diverges: exponent must exceed 1");
    const unsigned qmax = static_cast<unsigned>(term.poly.size()) - 1;
    // sum_{j >= j0} (j + d)^{-w} log^q(j + d) = (-1)^q zeta^{(q)}(w, j0 + d)
    auto zd = hurwitz_derivs(qmax, term.w, a);
    PrecReal s = 0;
    for (unsigned i = 0; i <= qmax; ++i) {
      if (term.poly[i] == 0) continue;
      PrecReal inner = 0;
      for (unsigned q = 0; q <= i; ++q) {
        PrecReal t = PrecReal(binomial(i, q)) * pow(lc, static_cast<int>(i - q)) * zd[q];
        inner += q % 2 == 0 ? t : PrecReal(-t);
      }
      s += term.poly[i] * inner;
    }
    total += pow(c, -term.w) * s;
  }
  return total;
}

long tail_start(const PrecReal& c, const PrecReal& d, const TailOptions& options) {
  if (!(c > 0)) throw DomainError("tail scale must be positive");
  const double y_min = std::max(30.0, 0.5 * current_digits());
  const double need = std::ceil(y_min / c.convert_to<double>() - d.convert_to<double>());
  return std::max<long>({options.n0, static_cast<long>(need), 1L});
}

std::vector<SeriesValue<PrecReal>> sum_with_tail(
    std::size_t count, const std::function<std::vector<SeriesValue<PrecReal>>(long)>& direct,
    const std::function<LogPowerGroup(std::size_t, unsigned)>& group, const PrecReal& c, const PrecReal& d,
    const TailOptions& options) {
  const long j0 = tail_start(c, d, options);
  const PrecReal eps = epsilon();
  std::vector<PrecReal> sum(count, PrecReal(0)), sumabs(count, PrecReal(0)), err(count, PrecReal(0));
  for (long j = 1; j < j0; ++j) {
    auto v = direct(j);
    for (std::size_t i = 0; i < count; ++i) {
      sum[i] += v[i].value;
      sumabs[i] += abs(v[i].value);
      err[i] += v[i].trunc_bound;
    }
  }
  std::vector<SeriesValue<PrecReal>> out;
  for (std::size_t i = 0; i < count; ++i) {
    PrecReal tail = 0, tailabs = 0, budget = -1, prev = -1;
    unsigned g = 0;
    for (; g < options.max_groups; ++g) {
      auto grp = simplify(group(i, g));
      if (grp.empty()) continue;
      PrecReal tg = group_tail_sum(grp, c, d, j0);
      PrecReal size = abs(tg);
      if (prev >= 0 && g >= 2 && size > prev) {
        budget = size;
        break;
      }
      tail += tg;
      tailabs += size;
      if (g >= 1 && size <= eps * (sumabs[i] + tailabs)) {
        budget = size;
        break;
      }
      prev = size;
    }
    if (budget < 0) budget = prev;
    PrecReal bound = err[i] + budget + 16 * eps * (sumabs[i] + tailabs);
    out.push_back({sum[i] + tail, bound, static_cast<long>(j0 - 1 + g)});
  }
  return out;
}

SeriesValue<PrecReal> sum_with_tail(const std::function<SeriesValue<PrecReal>(long)>& direct,
                                    const std::function<LogPowerGroup(unsigned)>& group, const PrecReal& c,
                                    const PrecReal& d, const TailOptions& options) {
  auto v = sum_with_tail(
      1, [&](long j) { return std::vector<SeriesValue<PrecReal>>{direct(j)}; },
      [&](std::size_t, unsigned g) { return group(g); }, c, d, options);
  return v[0];
}

}  // namespace psik
