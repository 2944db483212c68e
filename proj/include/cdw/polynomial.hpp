#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdw/rational.hpp"

namespace cdw {

/// Monomial exponents (a,b,c) for p1^a p2^b p3^c.
using Mono = std::array<int, 3>;

/// Homogeneous (or general) polynomial in the three momentum variables with
/// exact complex-rational coefficients. Zero coefficients are never stored.
class Poly3 {
 public:
  Poly3() = default;

  static Poly3 one() { return monomial({0, 0, 0}, RationalC(1)); }
  static Poly3 variable(int k);
  static Poly3 monomial(const Mono& m, RationalC c);
  /// p1^2 + p2^2 + p3^2
  static Poly3 radius_sq();

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  int degree() const;
  /// True when every monomial has the same total degree (vacuously for 0).
  bool homogeneous() const;
  const std::map<Mono, RationalC>& terms() const { return terms_; }

  void add_term(const Mono& m, const RationalC& c);
  RationalC coeff(const Mono& m) const;

  Poly3 operator+(const Poly3& o) const;
  Poly3 operator-(const Poly3& o) const;
  Poly3 operator*(const Poly3& o) const;
  Poly3 operator*(const RationalC& c) const;
  Poly3 operator-() const;
  bool operator==(const Poly3& o) const { return terms_ == o.terms_; }

  Poly3 derivative(int k) const;
  Poly3 laplacian() const;
  Poly3 conjugate() const;

  /// Canonical text form, e.g. "1/3 * p1^2 p3 + -2 * p2".
  std::string str() const;

 private:
  std::map<Mono, RationalC> terms_;
};

/// Exact decomposition P = sum_j |p|^(2j) * Y_j with Y_j harmonic of degree
/// deg(P) - 2j. Terms with vanishing Y_j are omitted. Requires homogeneous P.
std::vector<std::pair<int, Poly3>> harmonic_decompose(const Poly3& p);

/// Degree-deg harmonic component of the decomposition (zero if absent).
Poly3 harmonic_part(const Poly3& p, int deg);

/// Sphere pairing (1/4pi) * int conj(a) b dsigma via exact monomial moments.
/// Inputs of different homogeneity degree pair to zero by convention.
RationalC sphere_inner(const Poly3& a, const Poly3& b);

}  // namespace cdw
