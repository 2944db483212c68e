#pragma once

#include "cdw/types.hpp"

namespace cdw {

/// Gauss-Legendre collocation grid on a strictly positive frequency interval
/// with a barycentric differentiation matrix on the nodes.
class RadialGrid {
 public:
  RadialGrid(int n, Real omega_min, Real omega_max);

  int size() const { return static_cast<int>(nodes_.size()); }
  Real omega_min() const { return omega_min_; }
  Real omega_max() const { return omega_max_; }
  const VectorR& nodes() const { return nodes_; }
  const VectorR& quad_weights() const { return weights_; }
  const MatrixR& diff() const { return diff_; }

  /// Quadrature of samples against the plain measure d(omega).
  Real integrate(const VectorR& samples) const;

 private:
  Real omega_min_, omega_max_;
  VectorR nodes_;
  VectorR weights_;
  MatrixR diff_;
};

/// Diagonal of the spin-l radial Gram: w_j * omega_j^(2l+1).
VectorR radial_gram(int l, const RadialGrid& grid);

/// Diagonal of omega^s (s may be negative; grid is strictly positive).
VectorR mult_power(int s, const RadialGrid& grid);

/// d/domega as a matrix on node samples.
inline const MatrixR& diff_op(const RadialGrid& grid) { return grid.diff(); }

}  // namespace cdw
