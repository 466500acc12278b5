#pragma once

#include "psik/precision.hpp"
#include "psik/quadrature.hpp"
#include "psik/relations.hpp"
#include "psik/series_value.hpp"
#include "psik/zeta_engine.hpp"

namespace psik {

/// Xi(t) = xi(1/2 + it) with the factors it was assembled from.
struct XiPoint {
  PrecReal t;
  PrecReal xi_val;
  PrecComplex zeta_half;      ///< zeta(1/2 + it)
  PrecComplex gamma_quarter;  ///< Gamma(1/4 + it/2)
};

/// Throws NoiseFloorExceeded if the imaginary part of the product is above
/// 10^{-(D-8)} relative to its factors.
XiPoint xi_point(const PrecReal& t);
PrecReal xi_of(const PrecReal& t);

/// xi(1/2 + i w) for complex w.
PrecComplex xi_complex(const PrecComplex& w);

/// Gamma((z-2+it)/4) Gamma((z-2-it)/4) Xi((t+i(z-1))/2) Xi((t-i(z-1))/2)/(z^2+t^2).
PrecComplex omega(const PrecComplex& z, const PrecReal& t);

/// int_0^infinity omega(z, t) cos(t log(alpha)/2) dt for real 0 < z < 2.
SeriesValue<PrecReal> integral_I(const PrecReal& z, const Alpha& alpha, const QuadratureOptions& options = {});

/// 8 (4 pi)^{(z-4)/2} / Gamma(z) * I(z, alpha).
SeriesValue<PrecReal> integral_J(const PrecReal& z, const Alpha& alpha, const QuadratureOptions& options = {});

/// -pi^{-3/2} I(1, alpha): the integral form of the digamma bracket.
SeriesValue<PrecReal> ramanujan_integral(const Alpha& alpha, const QuadratureOptions& options = {});

/// The Xi integral with the psi((-1 +- it)/4) bracket that equals F_1.
SeriesValue<PrecReal> script_I(const Alpha& alpha, const QuadratureOptions& options = {});

/// Large-alpha expansion of script_I with m = 0..M-1; the bound is the m = M term.
SeriesValue<PrecReal> asympt_script_I(const PrecReal& alpha, unsigned M);

/// Large-alpha expansion of pi^{-3/2} I(1, alpha), k = 1..M; the bound is the k = M+1 term.
SeriesValue<PrecReal> asympt_ramanujan(const PrecReal& alpha, unsigned M);

enum class AsymptoticDirection { ToZero, ToInfinity };

/// Expansions of sum_{n >= 1} phi_1(n alpha) as alpha -> 0 or alpha -> infinity,
/// m = 0..M-1; the bound is the m = M term.
SeriesValue<PrecReal> asympt_phi1_sum(const PrecReal& alpha, unsigned M, AsymptoticDirection direction);

/// alpha^{z/2} (sum phi(z, n alpha) - zeta(z)/(2 alpha^z) - zeta(z-1)/(alpha (z-1))),
/// phi(z, y) = zeta(z, y) - y^{-z}/2 + y^{1-z}/(1-z).
SeriesValue<PrecReal> hurwitz_bracket(const PrecReal& z, const Alpha& alpha, const TailOptions& tail = {});

/// hurwitz_bracket(z, alpha) against integral_J(z, alpha).
RelationReport verify_hurwitz_integral(const PrecReal& z, const Alpha& alpha, const RelationOptions& options = {},
                                       const QuadratureOptions& quad = {});

/// The digamma bracket at alpha against its Xi integral.
RelationReport verify_ramanujan_integral(const Alpha& alpha, const RelationOptions& options = {},
                                         const QuadratureOptions& quad = {});

}  // namespace psik
