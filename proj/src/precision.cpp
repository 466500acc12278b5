#include "psik/precision.hpp"

#include "psik/errors.hpp"

#include <boost/multiprecision/detail/digits.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace psik {

namespace {

unsigned digits10_for_bits(unsigned bits) {
  unsigned d10 = 1;
  while (boost::multiprecision::detail::digits10_2_2(d10) < bits) ++d10;
  return d10;
}

}  // namespace

unsigned default_precision_bits();

namespace {

// Newly linked programs start at the library default rather than Boost's.
const bool default_applied = [] {
  PrecReal::default_precision(digits10_for_bits(default_precision_bits()));
  return true;
}();

}  // namespace

unsigned bits_for_digits(unsigned digits) {
  return static_cast<unsigned>(std::ceil(3.33 * (digits + 15.0)));
}

unsigned current_precision_bits() {
  return static_cast<unsigned>(
      boost::multiprecision::detail::digits10_2_2(PrecReal::default_precision()));
}

unsigned current_digits() {
  return static_cast<unsigned>(PrecReal::default_precision());
}

unsigned default_precision_bits() {
  if (const char* env = std::getenv("PSIK_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 53 && v <= 1 << 16) {
      return static_cast<unsigned>(v);
    }
  }
  return kDefaultPrecisionBits;
}

PrecisionScope::PrecisionScope(unsigned bits)
    : previous_digits10_(PrecReal::default_precision()) {
  PrecReal::default_precision(digits10_for_bits(bits));
  bits_ = current_precision_bits();
}

PrecisionScope::~PrecisionScope() { PrecReal::default_precision(previous_digits10_); }

PrecReal epsilon() {
  PrecReal one = 1;
  return ldexp(one, 1 - static_cast<int>(current_precision_bits()));
}

std::string to_string(const PrecReal& value, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits > 1 ? digits - 1 : 0) << value;
  return os.str();
}

PrecReal parse_real(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      PrecReal num(text.substr(0, slash));
      PrecReal den(text.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator in '" + text + "'");
      return num / den;
    }
    return PrecReal(text);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + text + "'");
  }
}

}  // namespace psik
