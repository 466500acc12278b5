#pragma once

#include "psik/complex.hpp"
#include "psik/precision.hpp"

#include <algorithm>

namespace psik::test {

inline PrecReal tenth_power(int digits) { return pow(PrecReal(10), -digits); }

/// |a - b| <= 10^{-digits} * max(|a|, |b|, floor).
inline bool agree(const PrecReal& a, const PrecReal& b, int digits, const PrecReal& floor = PrecReal(0)) {
  PrecReal scale = std::max({PrecReal(abs(a)), PrecReal(abs(b)), floor});
  return abs(a - b) <= tenth_power(digits) * scale;
}

inline bool agree(const Complex<PrecReal>& a, const Complex<PrecReal>& b, int digits) {
  PrecReal scale = std::max(abs(a), abs(b));
  return abs(a - b) <= tenth_power(digits) * scale;
}

inline PrecReal real_of(const char* text) { return PrecReal(text); }

}  // namespace psik::test
