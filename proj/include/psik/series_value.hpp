#pragma once

#include "psik/precision.hpp"

namespace psik {

/// Result of a truncated series, expansion or quadrature: the value (partial
/// sum plus any closed-form tail) together with an estimate of everything that
/// was left out, rounding included.
template <class T>
struct SeriesValue {
  T value{};
  PrecReal trunc_bound{0};
  long terms_used = 0;
};

using RealSeries = SeriesValue<PrecReal>;

}  // namespace psik
