#include "psik/quadrature.hpp"

#include "psik/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

namespace psik {

namespace {

std::vector<std::pair<PrecReal, PrecReal>> compute_gauss_legendre(unsigned n) {
  std::vector<std::pair<PrecReal, PrecReal>> nodes(n);
  const PrecReal tol = 4 * epsilon();
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    PrecReal x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    PrecReal dp = 0;
    for (int iter = 0; iter < 200; ++iter) {
      PrecReal p0 = 1, p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        PrecReal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      PrecReal dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= tol) break;
    }
    PrecReal p0 = 1, p1 = x;
    for (unsigned k = 2; k <= n; ++k) {
      PrecReal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    PrecReal w = 2 / ((1 - x * x) * dp * dp);
    nodes[i] = {-x, w};
    nodes[n - 1 - i] = {x, w};
  }
  return nodes;
}

}  // namespace

const std::vector<std::pair<PrecReal, PrecReal>>& gauss_legendre(unsigned order) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::vector<std::pair<PrecReal, PrecReal>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(current_precision_bits(), order);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_gauss_legendre(order)).first;
  return it->second;
}

PrecReal gauss_panel(const std::function<PrecReal(const PrecReal&)>& f, const PrecReal& a, const PrecReal& b,
                     unsigned order, unsigned threads) {
  const auto& nodes = gauss_legendre(order);
  const PrecReal mid = (a + b) / 2, half = (b - a) / 2;
  std::vector<PrecReal> values(nodes.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = f(mid + half * nodes[i].first);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(nodes.size())));
  if (threads == 1) {
    work(0, nodes.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (nodes.size() + threads - 1) / threads;
    for (std::size_t s = 0; s < nodes.size(); s += chunk) pool.emplace_back(work, s, std::min(nodes.size(), s + chunk));
    for (auto& t : pool) t.join();
  }
  PrecReal sum = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += nodes[i].second * values[i];
  return sum * half;
}

SeriesValue<PrecReal> integrate_to_infinity(const std::function<PrecReal(const PrecReal&)>& f,
                                            const QuadratureOptions& options) {
  const PrecReal tol = options.tolerance > 0 ? options.tolerance : PrecReal(pow(PrecReal(10), -PrecReal(current_digits()) / 2));
  const PrecReal rate = options.decay_rate > 0 ? options.decay_rate : PrecReal(pi<PrecReal>() / 2);
  const PrecReal power = options.decay_power;
  const unsigned order = options.order;

  PrecReal total = 0, total_abs = 0, halving = 0;
  unsigned panels = 0;
  // envelope constant fitted on the most recent stretch of the range
  PrecReal recent_max = 0, previous_max = 0;
  std::mutex trace_mu;
  auto envelope = [&](const PrecReal& t) { return PrecReal(pow(t, power) * exp(-rate * t)); };
  std::function<PrecReal(const PrecReal&)> traced = [&](const PrecReal& t) {
    PrecReal v = f(t);
    if (t >= 1) {
      PrecReal r = abs(v) / envelope(t);
      std::lock_guard<std::mutex> lock(trace_mu);
      if (r > recent_max) recent_max = r;
    }
    return v;
  };

  // adaptive integration of one panel; returns the finer estimate
  std::function<PrecReal(const PrecReal&, const PrecReal&, const PrecReal&, int)> panel =
      [&](const PrecReal& a, const PrecReal& b, const PrecReal& coarse, int depth) -> PrecReal {
    const PrecReal m = (a + b) / 2;
    PrecReal left = gauss_panel(traced, a, m, order, options.threads);
    PrecReal right = gauss_panel(traced, m, b, order, options.threads);
    panels += 2;
    PrecReal fine = left + right;
    PrecReal diff = abs(fine - coarse);
    PrecReal scale = std::max(PrecReal(total_abs + abs(fine)), PrecReal(epsilon()));
    if (diff <= tol * scale || depth >= 12 || panels >= options.max_panels) {
      halving += diff;
      return fine;
    }
    PrecReal lc = left, rc = right;
    return panel(a, m, lc, depth + 1) + panel(m, b, rc, depth + 1);
  };

  PrecReal a = 0;
  PrecReal tail = 0;
  for (;;) {
    if (panels >= options.max_panels) throw BudgetExceeded("quadrature: panel budget exhausted before the tail fell below target");
    PrecReal width = std::min(std::max(PrecReal("0.5"), PrecReal(a / 2)), PrecReal(8));
    PrecReal b = a + width;
    previous_max = recent_max;
    recent_max = 0;
    PrecReal coarse = gauss_panel(traced, a, b, order, options.threads);
    ++panels;
    PrecReal v = panel(a, b, coarse, 0);
    total += v;
    total_abs += abs(v);
    a = b;
    if (rate * a <= power + 1 || recent_max == 0) continue;
    PrecReal c = std::max(recent_max, previous_max);
    // int_T^inf t^p e^{-rt} dt <= T^p e^{-rT} / (r - p/T) for rT > p
    tail = 2 * c * envelope(a) / (rate - power / a);
    if (tail <= tol * total_abs) break;
  }
  PrecReal bound = halving + tail + 16 * epsilon() * total_abs;
  return {total, bound, static_cast<long>(panels) * order};
}

}  // namespace psik
