#pragma once

#include <map>
#include <vector>

#include "cdw/polynomial.hpp"

namespace cdw {

/// Exact rational matrix, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of the 2l+1 harmonic homogeneous polynomials of degree l, with its
/// exact sphere Gram (units of 4pi). Built from harmonic projections of
/// p3^(l-m) Re/Im((p1+i p2)^m), so all coefficients are rational and the Gram
/// comes out diagonal; nothing downstream assumes diagonality.
class AngularBasis {
 public:
  explicit AngularBasis(int l);

  int l() const { return l_; }
  int dim() const { return 2 * l_ + 1; }
  const std::vector<Poly3>& elements() const { return elements_; }
  const RationalMatrix& gram() const { return gram_; }

  /// Exact expansion coefficients of a harmonic degree-l polynomial.
  std::vector<RationalC> expand(const Poly3& y) const;

 private:
  int l_;
  std::vector<Poly3> elements_;
  RationalMatrix gram_;
};

AngularBasis& harmonic_basis(int l);  // cached, l >= 0

/// p_k Y = upper + |p|^2/(2l+1) * lower for harmonic Y of degree l, with
/// upper harmonic of degree l+1 and lower = d_k Y of degree l-1.
struct PkSplit {
  Poly3 upper;
  Poly3 lower;
  Rational lower_coeff;  // 1/(2l+1)
};
PkSplit multiply_pk(const Poly3& y, int k);

Poly3 gradient(const Poly3& y, int k);
/// (p_k d_l - p_l d_k) Y
Poly3 rotation_action(const Poly3& y, int k, int l);

/// Symmetric traceless families Y_{j1..jh} of harmonic degree-h polynomials,
/// generated by Y_{n j2..jh} = (p_n - |p|^2/(2h-1) d_n) Y_{j2..jh}.
class TracelessTensorFamily {
 public:
  explicit TracelessTensorFamily(int h);

  int rank() const { return h_; }
  const Poly3& component(std::vector<int> idx) const;  // sorted internally

  bool symmetric() const { return true; }  // by keyed storage
  /// Contraction of the first two indices vanishes identically.
  bool traceless() const;

 private:
  int h_;
  std::map<std::vector<int>, Poly3> comp_;
};

/// (p_n d_m - p_m d_n) Y_{n j2..jh} = -(h+1) Y_{m j2..jh}, exact, all free indices.
bool curl_identity_check(int h);

/// E_{l+1}|(eps_{lmn} p_k - eps_{kmn} p_l) p_m d_n Y> = l eps_{jkl} E_{l+1}|p_j Y>
/// as exact equality of degree-(l+1) harmonic parts for every basis Y and k,l.
bool epsilon_identity_check(int l);

// Exact angular matrices in the harmonic_basis coordinates (columns indexed by
// the source basis):
//   up_matrix:  coefficients of (p_k - |p|^2/(2l+1) d_k) Y_a in basis l+1
//   low_matrix: coefficients of d_k Y_a in basis l-1
//   rot_matrix: coefficients of (p_k d_l - p_l d_k) Y_a in basis l
std::vector<std::vector<RationalC>> up_matrix(int k, int l);
std::vector<std::vector<RationalC>> low_matrix(int k, int l);
std::vector<std::vector<RationalC>> rot_matrix(int k, int l, int deg);

}  // namespace cdw
