#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <type_traits>

namespace psik {

/// Working-precision real. Precision is taken from the process-wide default
/// at construction time; see PrecisionScope.
using PrecReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

using ExactInt = boost::multiprecision::mpz_int;
using ExactRat = boost::multiprecision::mpq_rational;

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Working bits for a requested number of output digits (15-digit guard band).
unsigned bits_for_digits(unsigned digits);

/// Bits actually used by newly constructed PrecReal values.
unsigned current_precision_bits();

/// Decimal digits carried by the current working precision.
unsigned current_digits();

/// Default working precision: PSIK_PRECISION_BITS if set and valid, else 256.
unsigned default_precision_bits();

/// Sets the working precision for the lifetime of the object and restores the
/// previous setting on destruction. The setting is process-wide: open scopes on
/// the controlling thread before spawning workers.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned bits() const { return bits_; }

 private:
  unsigned previous_digits10_;
  unsigned bits_;
};

/// Unit roundoff 2^(1-bits) at the current precision.
PrecReal epsilon();

/// Formats `value` in scientific notation with `digits` significant digits.
std::string to_string(const PrecReal& value, int digits = 30);

/// Parses a decimal literal or an exact ratio "p/q".
PrecReal parse_real(const std::string& text);

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real euler_gamma() {
  return boost::math::constants::euler<Real>();
}

template <class Real>
Real from_rational(const ExactRat& q) {
  if constexpr (std::is_floating_point_v<Real>) {
    return q.template convert_to<Real>();
  } else {
    return Real(q);
  }
}

template <class Real>
Real from_integer(const ExactInt& n) {
  if constexpr (std::is_floating_point_v<Real>) {
    return n.template convert_to<Real>();
  } else {
    return Real(n);
  }
}

}  // namespace psik
