#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cdw/types.hpp"

namespace cdw {

using Rational = boost::multiprecision::cpp_rational;

inline Real to_real(const Rational& q) { return q.convert_to<Real>(); }

/// Complex number with exact rational parts.
struct RationalC {
  Rational re{0};
  Rational im{0};

  RationalC() = default;
  RationalC(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  RationalC(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  RationalC(long n) : re(n) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re == 0 && im == 0; }
  RationalC conj() const { return {re, -im}; }
  Complex to_complex() const { return {to_real(re), to_real(im)}; }

  RationalC& operator+=(const RationalC& o) { re += o.re; im += o.im; return *this; }
  RationalC& operator-=(const RationalC& o) { re -= o.re; im -= o.im; return *this; }

  friend RationalC operator+(const RationalC& a, const RationalC& b) { return {a.re + b.re, a.im + b.im}; }
  friend RationalC operator-(const RationalC& a, const RationalC& b) { return {a.re - b.re, a.im - b.im}; }
  friend RationalC operator-(const RationalC& a) { return {-a.re, -a.im}; }
  friend RationalC operator*(const RationalC& a, const RationalC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const RationalC& a, const RationalC& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const Rational& q);

}  // namespace cdw
