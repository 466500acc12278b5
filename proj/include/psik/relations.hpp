#pragma once

#include "psik/log_power_tail.hpp"
#include "psik/precision.hpp"
#include "psik/series_value.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace psik {

/// A positive parameter, kept as an exact ratio when given as one so that
/// log(1/alpha) = -log(alpha) holds bit for bit.
class Alpha {
 public:
  explicit Alpha(const PrecReal& value);
  explicit Alpha(const ExactRat& value);
  /// "p/q" becomes exact, anything else a decimal.
  static Alpha parse(const std::string& text);

  Alpha reciprocal() const;
  PrecReal value() const;
  PrecReal log() const;
  bool is_one() const;
  std::string text() const;
  const std::optional<ExactRat>& exact() const { return exact_; }

 private:
  PrecReal value_;
  std::optional<ExactRat> exact_;
};

struct RelationReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  PrecReal lhs;
  PrecReal rhs;
  PrecReal abs_residual;
  PrecReal rel_residual;
  PrecReal error_budget;
  PrecReal tolerance_factor{10};
  bool pass = false;
  unsigned precision_bits = 0;
  double wall_time_s = 0;
  std::string note;
};

struct RelationOptions {
  PrecReal tolerance_factor{10};
  TailOptions tail;
};

/// Fills residuals, pass flag and precision for a report from two evaluated sides.
RelationReport make_report(std::string name, std::vector<std::pair<std::string, std::string>> params,
                           const SeriesValue<PrecReal>& lhs, const SeriesValue<PrecReal>& rhs,
                           const PrecReal& tolerance_factor);

/// sum_{n >= 1} u_j(n x), u_j(y) = psi_j(y) + log^j(y)/(2y) - log^{j+1}(y)/(j+1),
/// for j = 0..jmax. u_0 is phi of the digamma transformation.
std::vector<SeriesValue<PrecReal>> phi_sums(unsigned jmax, const PrecReal& x, const TailOptions& tail = {});

/// sum_{n >= 1} phi(n x), phi(y) = psi(y) + 1/(2y) - log y.
SeriesValue<PrecReal> eval_phi_sum(const PrecReal& x, const TailOptions& tail = {});

/// sqrt(x) {(gamma - log(2 pi x))/(2x) + sum phi(n x)}: the bracket that is
/// invariant under x -> 1/x.
SeriesValue<PrecReal> eval_phi_bracket(const Alpha& x, const TailOptions& tail = {});

/// The weighted combination F_k(x) of psi_0..psi_k series that is invariant
/// under x -> 1/x.
SeriesValue<PrecReal> eval_Fk(unsigned k, const Alpha& x, const TailOptions& tail = {});

/// F_1(x) in its phi / phi_1 form.
SeriesValue<PrecReal> eval_F1(const Alpha& x, const TailOptions& tail = {});

/// sum_{n >= 1} phi_1(n x), phi_1(y) = psi_1(y) + log(y)/(2y) - log^2(y)/2.
SeriesValue<PrecReal> eval_phi1_sum(const PrecReal& x, const TailOptions& tail = {});

RelationReport verify_ramanujan_k(unsigned k, const Alpha& alpha, const RelationOptions& options = {});

/// F_1(alpha) = F_1(1/alpha); with `with_integral` also F_1(alpha) = I(alpha)
/// and F_1(alpha) = I(1/alpha) (three reports in that order).
std::vector<RelationReport> verify_psi1(const Alpha& alpha, bool with_integral, const RelationOptions& options = {});

/// The finite Carlitz-type transformation between m and n.
RelationReport verify_carlitz(unsigned k, unsigned m, unsigned n, const PrecReal& x,
                              const RelationOptions& options = {});

/// k = 0 specialization written with the m log m / n log n terms.
RelationReport verify_carlitz_corollary(unsigned m, unsigned n, const PrecReal& x,
                                        const RelationOptions& options = {});

/// The finite transformation for psi_l^{(z-1)} weighted by h(r), s(i) = s(z, i).
RelationReport verify_meeting(unsigned k, unsigned z, unsigned m, unsigned n, const PrecReal& x,
                              const RelationOptions& options = {});

/// Duplication identities for psi', psi_1' (dup1) and psi', psi_1', psi_2' (dup2).
RelationReport verify_dup1(const PrecReal& x, const RelationOptions& options = {});
RelationReport verify_dup2(const PrecReal& x, const RelationOptions& options = {});

/// Modular relation for series of psi_l^{(z-1)}(1 + j/alpha), integer z >= 3.
RelationReport verify_guinand(unsigned k, unsigned z, const Alpha& alpha, const RelationOptions& options = {});

/// alpha^{z/2} sum psi^{(z-1)}(1 + j alpha) = beta^{z/2} sum psi^{(z-1)}(1 + j beta).
RelationReport verify_guigen(unsigned z, const Alpha& alpha, const RelationOptions& options = {});

/// The z = 2 case built on regularized series of psi_r'(1 + alpha j);
/// checked as LHS(alpha) = LHS(1/alpha).
RelationReport verify_curious(unsigned k, const Alpha& alpha, const RelationOptions& options = {});

/// alpha sum (psi'(1 + j alpha) - 1/(j alpha)) - log(alpha)/2 at alpha and 1/alpha.
RelationReport verify_guigen1(const Alpha& alpha, const RelationOptions& options = {});

/// One side of the z = 2 relation.
SeriesValue<PrecReal> curious_side(unsigned k, const Alpha& alpha, const TailOptions& tail = {});

/// One side of the z >= 3 relation.
SeriesValue<PrecReal> guinand_side(unsigned k, unsigned z, const Alpha& alpha, const TailOptions& tail = {});

/// sum_{n <= x} log^j(n y)/n against its main terms. The residual scaled by
/// x/log^j(x) is measured at x, 2x and 4x; the check passes when the later
/// two stay within twice the first. lhs/rhs are the sum and main terms at x.
RelationReport summatory_log_check(unsigned j, long x, const PrecReal& y, const RelationOptions& options = {});

/// zeta^{(l)}(n, x) rebuilt from psi_j^{(n-1)}(x) against direct evaluation.
RelationReport verify_inv6(unsigned n, unsigned l, const PrecReal& x, const RelationOptions& options = {});

/// gamma_1 from sum_{j >= 1} zeta'(2j + 1)/(2j + 1).
SeriesValue<PrecReal> gamma1_odd_zeta_series();

}  // namespace psik
