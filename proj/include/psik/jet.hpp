#pragma once

#include "psik/complex.hpp"

#include <cstddef>
#include <vector>

namespace psik {

/// Truncated Taylor series c_0 + c_1 e + ... + c_{n-1} e^{n-1} in a small
/// increment e. Coefficient p of f(z0 + e) is f^{(p)}(z0)/p!.
template <class T>
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::size_t order) : c_(order, T(0)) {}
  Jet(std::size_t order, const T& constant) : c_(order, T(0)) {
    if (order > 0) c_[0] = constant;
  }

  /// The jet of z0 + e.
  static Jet variable(std::size_t order, const T& z0) {
    Jet j(order, z0);
    if (order > 1) j.c_[1] = T(1);
    return j;
  }

  /// exp(slope * e) = sum slope^p / p! e^p.
  template <class S>
  static Jet exp_linear(std::size_t order, const S& slope) {
    Jet j(order);
    if (order == 0) return j;
    j.c_[0] = T(1);
    for (std::size_t p = 1; p < order; ++p) {
      j.c_[p] = j.c_[p - 1] * slope;
      j.c_[p] /= real_type_t<T>(static_cast<int>(p));
    }
    return j;
  }

  std::size_t order() const { return c_.size(); }
  const T& operator[](std::size_t p) const { return c_[p]; }
  T& operator[](std::size_t p) { return c_[p]; }
  const std::vector<T>& coefficients() const { return c_; }

  Jet& operator+=(const Jet& o) {
    for (std::size_t p = 0; p < c_.size(); ++p) c_[p] += o.c_[p];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t p = 0; p < c_.size(); ++p) c_[p] -= o.c_[p];
    return *this;
  }
  template <class S>
  Jet& operator*=(const S& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  /// this += s * o, without temporaries.
  template <class S>
  Jet& add_scaled(const S& s, const Jet& o) {
    for (std::size_t p = 0; p < c_.size(); ++p) c_[p] += o.c_[p] * s;
    return *this;
  }

  /// In-place multiplication by the linear jet (a + e).
  Jet& mul_linear(const T& a) {
    for (std::size_t p = c_.size(); p-- > 1;) c_[p] = c_[p] * a + c_[p - 1];
    if (!c_.empty()) c_[0] *= a;
    return *this;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
      for (std::size_t j = 0; i + j < a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

 private:
  std::vector<T> c_;
};

}  // namespace psik
