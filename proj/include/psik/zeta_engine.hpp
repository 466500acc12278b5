#pragma once

#include "psik/complex.hpp"
#include "psik/jet.hpp"
#include "psik/precision.hpp"
#include "psik/series_value.hpp"

#include <memory>
#include <vector>

namespace psik {

using PrecComplex = Complex<PrecReal>;

/// Taylor jet of a Hurwitz zeta function together with per-coefficient
/// error estimates.
template <class S>
struct HurwitzJet {
  Jet<S> jet;
  std::vector<PrecReal> err;
  long terms_used = 0;
};

/// B_{2j}/(2j)! for j = 0..count-1 at the current precision. Cached per precision.
std::shared_ptr<const std::vector<PrecReal>> bernoulli_scaled(unsigned count);

/// Coefficients c_p = zeta^{(p)}(z0 + e, x)/p!, p < order, by Euler-Maclaurin
/// with the z-derivatives taken termwise. With `subtract_pole` (z0 must be 1)
/// the jet is that of zeta(z, x) - 1/(z - 1).
HurwitzJet<PrecReal> hurwitz_jet(std::size_t order, const PrecReal& z0, const PrecReal& x,
                                 bool subtract_pole = false);
HurwitzJet<PrecComplex> hurwitz_jet(std::size_t order, const PrecComplex& z0, const PrecReal& x,
                                    bool subtract_pole = false);

/// zeta^{(r)}(z, x).
SeriesValue<PrecReal> hurwitz_deriv(unsigned r, const PrecReal& z, const PrecReal& x);
SeriesValue<PrecComplex> hurwitz_deriv(unsigned r, const PrecComplex& z, const PrecReal& x);

/// zeta^{(r)}(z, x) for r = 0..rmax, sharing one evaluation.
std::vector<PrecReal> hurwitz_derivs(unsigned rmax, const PrecReal& z, const PrecReal& x);

/// Riemann zeta at a complex point.
PrecComplex riemann_zeta(const PrecComplex& s);

/// zeta^{(r)}(z0, x) from the trapezoid rule on the circle |z - z0| = radius.
/// The circle must not contain z = 1.
SeriesValue<PrecComplex> zeta_deriv_cauchy(unsigned r, const PrecComplex& z0, const PrecReal& x,
                                           const PrecReal& radius);

/// Generalized Stieltjes constant gamma_k(x).
PrecReal stieltjes(unsigned k, const PrecReal& x);
SeriesValue<PrecReal> stieltjes_series(unsigned k, const PrecReal& x);

/// gamma_0(x), ..., gamma_kmax(x) with per-entry error estimates.
std::vector<SeriesValue<PrecReal>> stieltjes_all(unsigned kmax, const PrecReal& x);

/// gamma_k(x) from a contour average of zeta(z, x) - 1/(z - 1) around z = 1
/// (radius 1/2). Independent of the Taylor-jet path.
SeriesValue<PrecReal> stieltjes_cauchy(unsigned k, const PrecReal& x);

/// zeta^{(k)}(0). Cached per precision.
SeriesValue<PrecReal> zeta_deriv_at_zero(unsigned k);

PrecComplex gamma_complex(const PrecComplex& s);
PrecComplex log_gamma_complex(const PrecComplex& s);
PrecComplex digamma_complex(const PrecComplex& s);

PrecReal gamma_real(const PrecReal& x);
PrecReal digamma_real(const PrecReal& x);

}  // namespace psik
