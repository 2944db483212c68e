#pragma once

#include <complex>
#include <Eigen/Dense>

namespace cdw {

// Extended precision throughout the operator layer. The spin-weighted radial
// norms amplify edge-node rounding by several orders at high spin; 80-bit
// scalars keep every commutator floor well below the check tolerances.
using Real = long double;
using Complex = std::complex<Real>;

using MatrixC = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorC = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

inline constexpr Complex kI{Real(0), Real(1)};

/// Levi-Civita symbol on {0,1,2}.
inline int epsilon3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

}  // namespace cdw
