#pragma once

#include "psik/precision.hpp"
#include "psik/series_value.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace psik {

/// Gauss-Legendre nodes and weights on [-1, 1], cached per precision.
const std::vector<std::pair<PrecReal, PrecReal>>& gauss_legendre(unsigned order);

struct QuadratureOptions {
  unsigned order = 40;
  /// Relative target against the accumulated |integral|; 0 means 10^{-D/2}.
  PrecReal tolerance{0};
  /// Envelope C t^power e^{-rate t} assumed beyond the last panel.
  PrecReal decay_rate{0};  ///< 0 means pi/2
  PrecReal decay_power{2};
  unsigned max_panels = 4000;
  unsigned threads = 1;
};

/// Integral of f over one panel by `order`-point Gauss-Legendre. Node values
/// are computed on up to `threads` threads and summed in node order.
PrecReal gauss_panel(const std::function<PrecReal(const PrecReal&)>& f, const PrecReal& a, const PrecReal& b,
                     unsigned order, unsigned threads = 1);

/// int_0^infinity f(t) dt for an integrand with exponential decay. Panels grow
/// geometrically; each panel is accepted when halving it changes its value by
/// less than the target, otherwise it is bisected. The range stops at T once
/// the fitted envelope bounds the remaining tail below the target. The bound
/// adds the halving differences and the envelope tail.
SeriesValue<PrecReal> integrate_to_infinity(const std::function<PrecReal(const PrecReal&)>& f,
                                            const QuadratureOptions& options = {});

}  // namespace psik
