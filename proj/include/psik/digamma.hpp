#pragma once

#include "psik/precision.hpp"
#include "psik/series_value.hpp"

#include <vector>

namespace psik {

enum class PsiMethod {
  Laurent,         ///< -gamma_k(x) from the Hurwitz zeta Laurent jet at z = 1
  DefiningSeries,  ///< Dilcher's series with an Euler-Maclaurin tail in t
};

/// Generalized digamma function psi_k(x) = -gamma_k(x), x > 0.
SeriesValue<PrecReal> psi_k(unsigned k, const PrecReal& x, PsiMethod method = PsiMethod::Laurent);

/// psi_0(x), ..., psi_kmax(x) from one jet.
std::vector<SeriesValue<PrecReal>> psi_k_all(unsigned kmax, const PrecReal& x);

/// m-th x-derivative of psi_k:
///   psi_k^{(m)}(x) = -k! sum_r s(m+1, k-r+1) (-1)^r zeta^{(r)}(m+1, x) / r!.
/// m = 0 is psi_k itself.
SeriesValue<PrecReal> psi_k_deriv(unsigned k, unsigned m, const PrecReal& x);

/// psi_j^{(m)}(x) for j = 0..kmax from one Hurwitz jet at z = m+1.
std::vector<SeriesValue<PrecReal>> psi_k_deriv_all(unsigned kmax, unsigned m, const PrecReal& x);

/// Large-x expansion with Bernoulli groups m = 1..terms. The bound is the first
/// omitted group. Throws BudgetExceeded when that group is larger than the last
/// included one (x too small for the requested depth).
SeriesValue<PrecReal> psi_k_asymptotic(unsigned k, const PrecReal& x, unsigned terms);

/// Two leading groups of psi_k^{(z-1)}(x) for integer z >= 2, x >= 10. With
/// `with_error` the next (B_2) group is reported as the bound.
SeriesValue<PrecReal> psi_k_deriv_asymptotic(unsigned k, unsigned z, const PrecReal& x, bool with_error = true);

/// zeta^{(l)}(z, y), l = 0..L, rebuilt from psi_j^{(z-1)}(y), j = 0..L, through
/// the inverse convolution with kernel s(i) = s(z, i).
std::vector<PrecReal> inv6_reconstruct(unsigned z, const std::vector<PrecReal>& psi_derivs);

}  // namespace psik
