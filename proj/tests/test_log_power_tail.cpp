#include <doctest.h>

#include "psik/digamma.hpp"
#include "psik/errors.hpp"
#include "psik/log_power_tail.hpp"
#include "psik/zeta_engine.hpp"
#include "test_util.hpp"

using namespace psik;
using psik::test::agree;

TEST_CASE("differentiate matches a centred difference") {
  LogPowerGroup g{{PrecReal("1.5"), {PrecReal(2), PrecReal(-1), PrecReal(3)}}, {PrecReal(4), {PrecReal(0), PrecReal(5)}}};
  const PrecReal y = 7, h = PrecReal("1e-20");
  PrecReal numeric = (evaluate(g, y + h) - evaluate(g, y - h)) / (2 * h);
  CHECK(agree(evaluate(differentiate(g), y), numeric, 35));
  PrecReal second = (evaluate(g, y + h) - 2 * evaluate(g, y) + evaluate(g, y - h)) / (h * h);
  CHECK(agree(evaluate(differentiate(g, 2), y), second, 30));
}

TEST_CASE("simplify merges equal exponents and drops zeros") {
  LogPowerGroup g{{PrecReal(2), {PrecReal(1)}}, {PrecReal(2), {PrecReal(0), PrecReal(1)}}, {PrecReal(3), {PrecReal(0)}}};
  auto s = simplify(g);
  REQUIRE(s.size() == 1);
  CHECK(s[0].w == 2);
  CHECK(evaluate(s, PrecReal(5)) == evaluate(g, PrecReal(5)));
}

TEST_CASE("psi_k expansion groups reproduce psi_k at large argument") {
  const PrecReal y = 60;
  for (unsigned k = 0; k <= 3; ++k) {
    for (unsigned m = 0; m <= 2; ++m) {
      PrecReal total = 0;
      for (unsigned g = 0; g <= 18; ++g) total += evaluate(psi_k_expansion_group(k, m, g), y);
      PrecReal direct = m == 0 ? psi_k(k, y).value : psi_k_deriv(k, m, y).value;
      CHECK_MESSAGE(agree(total, direct, 50, PrecReal(1)), "k=" << k << " m=" << m);
    }
  }
}

TEST_CASE("hurwitz remainder groups reproduce zeta(z, y)") {
  const PrecReal z("2.5"), y = 100;
  PrecReal total = pow(y, 1 - z) / (z - 1) + pow(y, -z) / 2;
  for (unsigned g = 1; g <= 20; ++g) total += evaluate(hurwitz_remainder_group(z, g), y);
  CHECK(agree(total, hurwitz_deriv(0, z, y).value, 60));
  CHECK(hurwitz_remainder_group(z, 0).empty());
}

TEST_CASE("group tail sums are Hurwitz zeta derivatives") {
  LogPowerGroup plain{{PrecReal(3), {PrecReal(1)}}};
  CHECK(agree(group_tail_sum(plain, PrecReal(1), PrecReal(0), 5), hurwitz_deriv(0, PrecReal(3), PrecReal(5)).value, 70));
  LogPowerGroup logged{{PrecReal(3), {PrecReal(0), PrecReal(1)}}};
  CHECK(agree(group_tail_sum(logged, PrecReal(1), PrecReal(0), 5), -hurwitz_deriv(1, PrecReal(3), PrecReal(5)).value,
              70));
  // sum_{j >= 4} (2 (j + 1/2))^{-3} log(2 (j + 1/2))
  const PrecReal c = 2, d("0.5");
  PrecReal expect = pow(c, -3) * (log(c) * hurwitz_deriv(0, PrecReal(3), PrecReal("4.5")).value -
                                  hurwitz_deriv(1, PrecReal(3), PrecReal("4.5")).value);
  CHECK(agree(group_tail_sum(logged, c, d, 4), expect, 70));
  LogPowerGroup divergent{{PrecReal(1), {PrecReal(1)}}};
  CHECK_THROWS_AS(group_tail_sum(divergent, c, d, 4), DomainError);
}

TEST_CASE("sum_with_tail: zeta(2) - zeta'(3)") {
  TailOptions opts;
  opts.n0 = 10;
  auto direct = [](long j) {
    PrecReal y = j;
    return SeriesValue<PrecReal>{1 / (y * y) + log(y) / (y * y * y), 0, 1};
  };
  auto group = [](unsigned g) {
    if (g > 0) return LogPowerGroup{};
    return LogPowerGroup{{PrecReal(2), {PrecReal(1)}}, {PrecReal(3), {PrecReal(0), PrecReal(1)}}};
  };
  auto s = sum_with_tail(direct, group, PrecReal(1), PrecReal(0), opts);
  PrecReal expect = hurwitz_deriv(0, PrecReal(2), PrecReal(1)).value - hurwitz_deriv(1, PrecReal(3), PrecReal(1)).value;
  CHECK(abs(s.value - expect) <= s.trunc_bound);
  CHECK(agree(s.value, expect, 70));
  CHECK(tail_start(PrecReal(1), PrecReal(0), opts) >= 10);
}

TEST_CASE("sum_with_tail: psi' series, scalar and vector paths") {
  // sum_{j >= 1} (psi'(j) - 1/j - 1/(2 j^2)) = 1 - pi^2/12, from H_N + N psi'(N+1) partial sums
  TailOptions opts;
  opts.n0 = 50;
  auto term = [](long j) {
    auto v = psi_k_deriv(0, 1, PrecReal(j));
    v.value -= 1 / PrecReal(j) + 1 / (2 * PrecReal(j) * j);
    return v;
  };
  auto group = [](unsigned g) { return g == 0 ? LogPowerGroup{} : psi_k_expansion_group(0, 1, g); };
  auto scalar = sum_with_tail(term, group, PrecReal(1), PrecReal(0), opts);
  const PrecReal expect = 1 - pi<PrecReal>() * pi<PrecReal>() / 12;
  CHECK(agree(scalar.value, expect, 70));
  CHECK(abs(scalar.value - expect) <= scalar.trunc_bound);

  auto vec = sum_with_tail(
      2,
      [&](long j) {
        PrecReal y = j;
        return std::vector<SeriesValue<PrecReal>>{term(j), {log(y) / (y * y * y), 0, 1}};
      },
      [&](std::size_t i, unsigned g) {
        if (i == 0) return group(g);
        return g == 0 ? LogPowerGroup{{PrecReal(3), {PrecReal(0), PrecReal(1)}}} : LogPowerGroup{};
      },
      PrecReal(1), PrecReal(0), opts);
  CHECK(vec[0].value == scalar.value);
  CHECK(agree(vec[1].value, -hurwitz_deriv(1, PrecReal(3), PrecReal(1)).value, 70));
}
