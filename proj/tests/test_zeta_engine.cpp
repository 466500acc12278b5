#include <doctest.h>

#include "psik/combinatorics.hpp"
#include "psik/errors.hpp"
#include "psik/zeta_engine.hpp"
#include "test_util.hpp"

using namespace psik;
using psik::test::agree;

namespace {

PrecReal pi_r() { return pi<PrecReal>(); }

// Direct sum of (n+x)^{-z} over n < N plus integral, midpoint and first two
// derivative corrections at the cut.
PrecReal hurwitz_direct(const PrecReal& z, const PrecReal& x, long N) {
  PrecReal s = 0;
  for (long n = 0; n < N; ++n) s += pow(x + n, -z);
  PrecReal a = x + N;
  s += pow(a, 1 - z) / (z - 1) + pow(a, -z) / 2 + z * pow(a, -z - 1) / 12 -
       z * (z + 1) * (z + 2) * pow(a, -z - 3) / 720;
  return s;
}

}  // namespace

TEST_CASE("hurwitz zeta special values") {
  const PrecReal two = 2;
  auto z21 = hurwitz_deriv(0, two, PrecReal(1));
  CHECK(agree(z21.value, pi_r() * pi_r() / 6, 70));
  auto zh = hurwitz_deriv(0, two, PrecReal("0.5"));
  CHECK(agree(zh.value, pi_r() * pi_r() / 2, 70));
  CHECK(z21.trunc_bound >= 0);

  PrecisionScope scope(120);
  PrecReal direct = hurwitz_direct(PrecReal(2), PrecReal(1), 20000);
  CHECK(agree(hurwitz_deriv(0, PrecReal(2), PrecReal(1)).value, direct, 25));
  PrecReal direct3 = hurwitz_direct(PrecReal("3.5"), PrecReal("2.3"), 5000);
  CHECK(agree(hurwitz_deriv(0, PrecReal("3.5"), PrecReal("2.3")).value, direct3, 25));
}

TEST_CASE("hurwitz at z = 1 is a pole") {
  CHECK_THROWS_AS(hurwitz_deriv(0, PrecReal(1), PrecReal(1)), PoleError);
  CHECK_THROWS_AS(hurwitz_deriv(0, PrecReal(2), PrecReal(0)), DomainError);
}

TEST_CASE("hurwitz derivative jets agree with contour averages") {
  const int digits = static_cast<int>(current_digits()) - 10;
  const char* xs[] = {"0.5", "1", "2.3"};
  std::vector<PrecComplex> zs{PrecComplex(PrecReal(2)), PrecComplex(PrecReal(3)), PrecComplex(PrecReal(4)),
                              PrecComplex(PrecReal("0.5"), PrecReal(3))};
  for (const auto& z : zs) {
    for (const char* xt : xs) {
      PrecReal x(xt);
      for (unsigned r = 0; r <= 4; ++r) {
        auto direct = hurwitz_deriv(r, z, x);
        auto contour = zeta_deriv_cauchy(r, z, x, PrecReal("0.5"));
        CHECK_MESSAGE(agree(direct.value, contour.value, digits), "r=" << r << " z=" << z << " x=" << xt);
      }
    }
  }
}

TEST_CASE("contour enclosing the pole is rejected") {
  CHECK_THROWS_AS(zeta_deriv_cauchy(0, PrecComplex(PrecReal("1.2")), PrecReal(1), PrecReal("0.5")), PoleError);
}

TEST_CASE("hurwitz shift identity") {
  const char* xs[] = {"0.3", "1.7", "5"};
  for (const char* xt : xs) {
    PrecReal x(xt);
    for (const PrecReal& z : {PrecReal(2), PrecReal("0.25"), PrecReal(-3)}) {
      auto a = hurwitz_derivs(5, z, x);
      auto b = hurwitz_derivs(5, z, x + 1);
      PrecReal L = log(x);
      for (unsigned r = 0; r <= 5; ++r) {
        PrecReal expect = pow(-L, static_cast<int>(r)) * pow(x, -z);
        CHECK(agree(a[r] - b[r], expect, 65, PrecReal(abs(a[r]))));
      }
    }
  }
}

TEST_CASE("large-x expansion of hurwitz derivatives") {
  // Residual after the two leading groups, scaled by x^{z+1}/log^r x, stays bounded.
  for (const PrecReal& z : {PrecReal(2), PrecReal("2.5"), PrecReal(3)}) {
    for (unsigned r = 0; r <= 3; ++r) {
      auto scaled = [&](const PrecReal& x) {
        PrecReal L = log(x);
        PrecReal lead = 0;
        for (unsigned t = 0; t <= r; ++t) {
          lead += PrecReal(binomial(r, t)) * PrecReal(factorial(t)) / pow(z - 1, static_cast<int>(t + 1)) *
                  pow(L, static_cast<int>(r - t)) / pow(x, z - 1);
        }
        lead += pow(L, static_cast<int>(r)) / (2 * pow(x, z));
        if (r % 2 == 1) lead = -lead;
        PrecReal res = hurwitz_deriv(r, z, x).value - lead;
        return PrecReal(abs(res) * pow(x, z + 1) / pow(L, static_cast<int>(r)));
      };
      PrecReal c = scaled(PrecReal(50));
      CHECK(c > 0);
      CHECK(scaled(PrecReal(100)) <= 2 * c);
      CHECK(scaled(PrecReal(200)) <= 2 * c);
    }
  }
}

TEST_CASE("stieltjes constants") {
  CHECK(agree(stieltjes(0, PrecReal(1)), euler_gamma<PrecReal>(), 72));
  // gamma_0(x) = -digamma(x)
  CHECK(agree(stieltjes(0, PrecReal("0.5")), -digamma_real(PrecReal("0.5")), 70));
  PrecReal g1("-0.07281584548367672486058637587490131913773633833433795259900655974");
  CHECK(agree(stieltjes(1, PrecReal(1)), g1, 60));

  PrecisionScope scope(200);
  for (const char* xt : {"0.3", "1", "2.7"}) {
    PrecReal x(xt);
    auto all = stieltjes_all(6, x);
    for (unsigned k = 0; k <= 6; ++k) {
      auto c = stieltjes_cauchy(k, x);
      CHECK_MESSAGE(agree(all[k].value, c.value, 45, PrecReal(1)), "k=" << k << " x=" << xt);
    }
  }
}

// With k <= 8 the omitted k = 9 term is about 10^{-19} relative, so the
// 8-term check asks for 18 digits and the 12-term check for 20.
static void check_laurent(unsigned kmax, int digits) {
  PrecReal x("1.7");
  auto g = stieltjes_all(kmax, x);
  for (int dir = 0; dir < 4; ++dir) {
    PrecComplex z = PrecComplex(PrecReal(1)) + PrecComplex(cos(pi_r() * dir / 2), sin(pi_r() * dir / 2)) * PrecReal("0.1");
    PrecComplex e = z - PrecComplex(PrecReal(1));
    PrecComplex sum = PrecComplex(PrecReal(1)) / e;
    PrecComplex pw(PrecReal(1));
    PrecReal f = 1;
    for (unsigned k = 0; k <= kmax; ++k) {
      if (k > 0) f *= k;
      PrecComplex t = pw * (g[k].value / f);
      if (k % 2 == 1) t = -t;
      sum += t;
      pw *= e;
    }
    CHECK(agree(sum, hurwitz_deriv(0, z, x).value, digits));
  }
}

TEST_CASE("laurent reconstruction near z = 1") {
  check_laurent(8, 18);
  check_laurent(12, 20);
}

TEST_CASE("zeta derivatives at zero") {
  PrecReal l2pi = log(2 * pi_r());
  PrecReal g = euler_gamma<PrecReal>();
  PrecReal g1 = stieltjes(1, PrecReal(1));
  CHECK(agree(zeta_deriv_at_zero(0).value, PrecReal("-0.5"), 60));
  CHECK(agree(zeta_deriv_at_zero(1).value, -l2pi / 2, 60));
  PrecReal z2 = -l2pi * l2pi / 2 - pi_r() * pi_r() / 24 + g * g / 2 + g1;
  CHECK(agree(zeta_deriv_at_zero(2).value, z2, 55));
  // functional equation at the jet level: the Cauchy values match a direct jet at 0
  auto jet = hurwitz_derivs(4, PrecReal(0), PrecReal(1));
  for (unsigned k = 0; k <= 4; ++k) CHECK(agree(zeta_deriv_at_zero(k).value, jet[k], 50));
}

TEST_CASE("gamma function") {
  CHECK(agree(gamma_real(PrecReal(1)), PrecReal(1), 74));
  CHECK(agree(gamma_real(PrecReal("0.5")), sqrt(pi_r()), 74));
  CHECK(agree(gamma_real(PrecReal(6)), PrecReal(120), 74));
  CHECK_THROWS_AS(gamma_complex(PrecComplex(PrecReal(-2))), PoleError);
  CHECK_THROWS_AS(gamma_complex(PrecComplex(PrecReal(0))), PoleError);

  // duplication: Gamma(z) Gamma(z + 1/2) = 2^{1-2z} sqrt(pi) Gamma(2z)
  for (const PrecComplex& z : {PrecComplex(PrecReal("0.3"), PrecReal(2)), PrecComplex(PrecReal("-1.7"), PrecReal("0.4")),
                               PrecComplex(PrecReal("0.25"), PrecReal(20))}) {
    PrecComplex lhs = gamma_complex(z) * gamma_complex(z + PrecReal("0.5"));
    PrecComplex two_z = z * PrecReal(2);
    PrecComplex rhs = exp((PrecComplex(PrecReal(1)) - two_z) * PrecReal(log(PrecReal(2)))) * sqrt(pi_r()) * gamma_complex(two_z);
    CHECK(agree(lhs, rhs, 70));
  }

  // |Gamma(sigma + it)| ~ sqrt(2 pi) |t|^{sigma - 1/2} e^{-pi |t| / 2}
  PrecReal sigma("0.25"), t(40);
  PrecReal mag = abs(gamma_complex(PrecComplex(sigma, t)));
  PrecReal lead = sqrt(2 * pi_r()) * pow(t, sigma - PrecReal("0.5")) * exp(-pi_r() * t / 2);
  CHECK(abs(mag / lead - 1) < PrecReal("0.03"));

  PrecComplex lg = log_gamma_complex(PrecComplex(PrecReal("0.3"), PrecReal(7)));
  CHECK(agree(exp(lg), gamma_complex(PrecComplex(PrecReal("0.3"), PrecReal(7))), 70));
}

TEST_CASE("digamma function") {
  PrecReal g = euler_gamma<PrecReal>();
  CHECK(agree(digamma_real(PrecReal(1)), -stieltjes(0, PrecReal(1)), 74));
  CHECK(agree(digamma_real(PrecReal(2)), 1 - g, 74));
  CHECK(agree(digamma_real(PrecReal("0.5")), -g - 2 * log(PrecReal(2)), 74));
  CHECK_THROWS_AS(digamma_complex(PrecComplex(PrecReal(-1))), PoleError);
  // duplication: psi(2z) = psi(z)/2 + psi(z + 1/2)/2 + log 2
  PrecComplex z(PrecReal("-0.75"), PrecReal(3));
  PrecComplex lhs = digamma_complex(z * PrecReal(2));
  PrecComplex rhs = (digamma_complex(z) + digamma_complex(z + PrecReal("0.5"))) / PrecReal(2) + PrecReal(log(PrecReal(2)));
  CHECK(agree(lhs, rhs, 70));
}
