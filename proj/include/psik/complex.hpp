#pragma once

#include <cmath>
#include <ostream>

namespace psik {

/// Minimal complex type over an arbitrary real scalar. std::complex is only
/// specified for the built-in floating types, so multiprecision code uses this.
template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }
  Complex operator-() const { return {-re, -im}; }
};

template <class R> Complex<R> operator+(Complex<R> a, const Complex<R>& b) { return a += b; }
template <class R> Complex<R> operator-(Complex<R> a, const Complex<R>& b) { return a -= b; }
template <class R> Complex<R> operator*(Complex<R> a, const Complex<R>& b) { return a *= b; }
template <class R> Complex<R> operator/(Complex<R> a, const Complex<R>& b) { return a /= b; }
template <class R> Complex<R> operator+(Complex<R> a, const R& b) { a.re += b; return a; }
template <class R> Complex<R> operator+(const R& b, Complex<R> a) { a.re += b; return a; }
template <class R> Complex<R> operator-(Complex<R> a, const R& b) { a.re -= b; return a; }
template <class R> Complex<R> operator-(const R& b, const Complex<R>& a) { return {b - a.re, -a.im}; }
template <class R> Complex<R> operator*(Complex<R> a, const R& b) { return a *= b; }
template <class R> Complex<R> operator*(const R& b, Complex<R> a) { return a *= b; }
template <class R> Complex<R> operator/(Complex<R> a, const R& b) { return a /= b; }
template <class R> Complex<R> operator/(const R& b, const Complex<R>& a) { return Complex<R>(b) / a; }

template <class R> bool operator==(const Complex<R>& a, const Complex<R>& b) {
  return a.re == b.re && a.im == b.im;
}

template <class R> R real(const Complex<R>& z) { return z.re; }
template <class R> R imag(const Complex<R>& z) { return z.im; }
template <class R> Complex<R> conj(const Complex<R>& z) { return {z.re, -z.im}; }
template <class R> R norm(const Complex<R>& z) { return z.re * z.re + z.im * z.im; }

template <class R>
R abs(const Complex<R>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <class R>
R arg(const Complex<R>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class R>
Complex<R> exp(const Complex<R>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  R m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal branch.
template <class R>
Complex<R> log(const Complex<R>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

/// Principal branch of w^s.
template <class R>
Complex<R> pow(const Complex<R>& w, const Complex<R>& s) {
  return exp(s * log(w));
}

template <class R>
Complex<R> sqrt(const Complex<R>& z) {
  using std::sqrt;
  R m = abs(z);
  R r = sqrt((m + z.re) / 2);
  R i = sqrt((m - z.re) / 2);
  return {r, z.im < 0 ? R(-i) : i};
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Complex<R>& z) {
  return os << '(' << z.re << (z.im < 0 ? " - " : " + ") << (z.im < 0 ? R(-z.im) : z.im) << "i)";
}

/// |x| for both real and complex scalars.
template <class R>
R magnitude(const Complex<R>& z) {
  return abs(z);
}

template <class R>
R magnitude(const R& x) {
  using std::abs;
  return abs(x);
}

template <class T>
struct real_type {
  using type = T;
};
template <class R>
struct real_type<Complex<R>> {
  using type = R;
};
template <class T>
using real_type_t = typename real_type<T>::type;

}  // namespace psik
