#include <doctest.h>

#include "psik/digamma.hpp"
#include "psik/errors.hpp"
#include "psik/relations.hpp"
#include "psik/zeta_engine.hpp"
#include "test_util.hpp"

using namespace psik;
using psik::test::agree;

namespace {

// sum_{n < N} phi(n x) by the classical digamma plus the large-y expansion of
// phi summed in Hurwitz form for n >= N.
PrecReal phi_sum_oracle(const PrecReal& x, long N) {
  PrecReal s = 0;
  for (long n = 1; n < N; ++n) {
    PrecReal y = n * x;
    s += digamma_real(y) + 1 / (2 * y) - log(y);
  }
  const PrecReal tail_coeffs[] = {PrecReal(-1) / 12, PrecReal(1) / 120, PrecReal(-1) / 252, PrecReal(1) / 240};
  for (int i = 0; i < 4; ++i) {
    const int p = 2 * (i + 1);
    s += tail_coeffs[i] * pow(x, -p) * hurwitz_deriv(0, PrecReal(p), PrecReal(N)).value;
  }
  return s;
}

}  // namespace

TEST_CASE("alpha parsing keeps ratios exact") {
  Alpha half = Alpha::parse("3/6");
  REQUIRE(half.exact());
  CHECK(*half.exact() == ExactRat(1, 2));
  CHECK(half.value() == PrecReal("0.5"));
  CHECK(half.reciprocal().value() == 2);
  CHECK(half.reciprocal().log() == -half.log());
  CHECK(Alpha::parse("1.25").exact() == ExactRat(5, 4));
  CHECK(Alpha::parse("1").is_one());
  CHECK(Alpha::parse("2/3").text() == "2/3");
  for (const char* bad : {"0", "-1", "abc", "1/0", "", "2/-3"}) {
    CHECK_THROWS_AS(Alpha::parse(bad), DomainError);
  }
}

TEST_CASE("make_report residuals and pass flag") {
  SeriesValue<PrecReal> a{PrecReal(2), PrecReal("1e-10"), 1}, b{PrecReal("2.000000000001"), PrecReal("1e-10"), 1};
  auto r = make_report("x", {{"k", "1"}}, a, b, PrecReal(10));
  CHECK(agree(r.abs_residual, PrecReal("1e-12"), 50));
  CHECK(agree(r.error_budget, PrecReal("2e-10"), 50));
  CHECK(r.pass);
  auto tight = make_report("x", {}, a, b, PrecReal("0.001"));
  CHECK_FALSE(tight.pass);
  CHECK(r.precision_bits == current_precision_bits());
}

TEST_CASE("phi series against a direct sum") {
  for (const char* xt : {"0.7", "2"}) {
    const PrecReal x(xt);
    auto s = eval_phi_sum(x);
    CHECK_MESSAGE(agree(s.value, phi_sum_oracle(x, 1000), 25), "x=" << xt);
    CHECK(s.trunc_bound < PrecReal("1e-60"));
  }
}

TEST_CASE("phi bracket and F_k are invariant under alpha -> 1/alpha") {
  for (const char* a : {"3/7", "2.5"}) {
    Alpha alpha = Alpha::parse(a);
    auto p = eval_phi_bracket(alpha), q = eval_phi_bracket(alpha.reciprocal());
    CHECK(abs(p.value - q.value) <= 10 * (p.trunc_bound + q.trunc_bound));
    for (unsigned k = 1; k <= 2; ++k) {
      auto f = eval_Fk(k, alpha), g = eval_Fk(k, alpha.reciprocal());
      CHECK_MESSAGE(abs(f.value - g.value) <= 10 * (f.trunc_bound + g.trunc_bound), "k=" << k << " alpha=" << a);
    }
  }
  // F_1 in its two written forms
  Alpha two = Alpha::parse("2");
  CHECK(agree(eval_F1(two).value, eval_Fk(1, two).value, 40));
}

TEST_CASE("modular relation at alpha = 1 is exact") {
  auto r = verify_ramanujan_k(0, Alpha::parse("1"));
  CHECK(r.abs_residual == 0);
  CHECK(r.pass);
}

TEST_CASE("psi_1 modular report without the integral") {
  auto rs = verify_psi1(Alpha::parse("3"), false);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].name == "psi1-modular");
  CHECK(rs[0].pass);
}

TEST_CASE("finite identities") {
  const PrecReal x("0.7");
  CHECK(verify_carlitz(2, 3, 4, x).pass);
  CHECK(verify_carlitz(1, 3, 3, x).abs_residual == 0);
  CHECK(verify_carlitz_corollary(2, 5, x).pass);
  CHECK(verify_meeting(3, 3, 2, 5, x).pass);
  CHECK(verify_meeting(1, 2, 1, 2, PrecReal("1.3")).pass);
  CHECK(verify_dup1(PrecReal("1.3")).pass);
  CHECK(verify_dup2(PrecReal("0.4")).pass);
  CHECK_THROWS_AS(verify_carlitz(0, 0, 2, x), DomainError);
  CHECK_THROWS_AS(verify_carlitz(0, 2, 2, PrecReal(-1)), DomainError);
  CHECK_THROWS_AS(verify_meeting(0, 1, 2, 2, x), DomainError);
}

TEST_CASE("series relations for z >= 2") {
  Alpha alpha = Alpha::parse("2");
  CHECK(verify_guinand(1, 3, alpha).pass);
  CHECK(verify_guigen(4, alpha).pass);
  CHECK(verify_curious(1, alpha).pass);
  CHECK(verify_guigen1(alpha).pass);
  // the k = 0 side of the z >= 3 relation is the guigen combination
  CHECK(agree(guinand_side(0, 3, alpha).value, guinand_side(0, 3, alpha.reciprocal()).value, 60));
}

TEST_CASE("summatory check and reconstruction from psi_j derivatives") {
  auto s = summatory_log_check(2, 1000, PrecReal(3));
  CHECK(s.pass);
  CHECK_FALSE(s.note.empty());
  auto r = verify_inv6(3, 2, PrecReal("2.3"));
  CHECK(r.pass);
  CHECK(r.rel_residual < PrecReal("1e-60"));
}

TEST_CASE("gamma_1 from odd zeta derivatives") {
  auto g = gamma1_odd_zeta_series();
  CHECK(agree(g.value, stieltjes(1, PrecReal(1)), 60));
  CHECK(agree(g.value, PrecReal("-0.07281584548367672486058637587490131913774"), 38));
}
