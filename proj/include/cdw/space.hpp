#pragma once

#include <cstdint>
#include <vector>

#include "cdw/harmonic.hpp"
#include "cdw/radial.hpp"
#include "cdw/types.hpp"

namespace cdw {

/// Coordinate label of one truncated one-particle amplitude.
struct SectorIndex {
  int charge;  // +1 or -1
  int l;       // spin
  int a;       // angular basis index, 0..2l
  int j;       // radial node
};

class ScalarSpace;

/// Complex amplitudes over all sectors in orthonormal coordinates: per
/// (charge, l) a (2l+1) x N block, rows = angular index, cols = radial node.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(const ScalarSpace& space);

  const ScalarSpace& space() const { return *space_; }
  MatrixC& block(int cs, int l);
  const MatrixC& block(int cs, int l) const;

  Real norm() const;
  Complex dot(const StateVector& o) const;  // conjugate-linear in *this
  StateVector& operator+=(const StateVector& o);
  StateVector& operator-=(const StateVector& o);
  StateVector& operator*=(Complex c);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(Complex c, StateVector v) { return v *= c; }

  /// Keep only spin-l (both charges).
  StateVector project_spin(int l) const;
  /// Keep only spins >= h.
  StateVector project_spin_geq(int h) const;
  /// Keep only the given charge (+1/-1).
  StateVector project_charge(int charge) const;

 private:
  const ScalarSpace* space_ = nullptr;
  std::vector<MatrixC> comp_;
};

/// Truncated one-particle space of the complex massless scalar field:
/// angular bases with exact Grams per spin, a radial collocation grid, and
/// the orthonormalizing maps used by every operator block.
class ScalarSpace {
 public:
  ScalarSpace(int l_max, RadialGrid grid);

  int l_max() const { return l_max_; }
  int n_radial() const { return grid_.size(); }
  const RadialGrid& grid() const { return grid_; }
  long dimension() const;

  /// sqrt(w_j omega_j^(2l+1)) per node: orthonormal radial scaling of spin l.
  const VectorR& radial_scale(int l) const { return s_[l]; }
  /// Transposed angular Cholesky factor L^T of the exact Gram at spin l.
  const MatrixR& ang_chol_t(int l) const { return chol_t_[l]; }

  /// Orthonormal form of a raw angular coefficient map (basis li -> basis lo).
  MatrixC ang_on(const std::vector<std::vector<RationalC>>& raw, int lo, int li) const;
  /// Orthonormal form of a raw radial sample-space matrix between spins.
  MatrixC rad_on(const MatrixR& raw, int lo, int li) const;
  MatrixC rad_on_diag(const VectorR& diag_raw) const;  // spin-independent

  /// State with a single (charge, l) sector: raw angular coefficients y (in
  /// the harmonic basis) tensored with radial samples g(omega_j).
  StateVector state_from_profile(int charge, int l, const VectorC& angular_raw, const VectorC& samples) const;

  /// Raw angular coefficients -> orthonormal coordinates at spin l.
  VectorC ang_to_on(int l, const VectorC& raw) const;

 private:
  int l_max_;
  RadialGrid grid_;
  std::vector<VectorR> s_;
  std::vector<MatrixR> chol_t_;      // L^T per l
  std::vector<MatrixR> chol_t_inv_;  // (L^T)^{-1} per l
};

/// Deterministic generator for test data; fixed mapping from the engine's
/// 64-bit output so streams are reproducible bit-for-bit across platforms.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  /// uniform in [0,1)
  Real uniform();
  /// uniform in [-1,1) + i[-1,1)
  Complex uniform_complex();

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

struct TestVectorOptions {
  int count = 20;
  std::uint64_t seed = 1;
  int delta_ell = 2;  // spin support limited to l <= l_max - delta_ell
  int min_ell = 0;    // and l >= min_ell
  int profile_degree = 3;
};

/// Pseudo-random truncation-safe states: spin support away from l_max and
/// radial profiles q(omega) * (omega-a)^2 (b-omega)^2 vanishing at the ends.
std::vector<StateVector> interior_test_vectors(const ScalarSpace& space, const TestVectorOptions& opt);

/// Samples of (omega-a)^2 (b-omega)^2 normalized to unit maximum scale.
VectorC interior_bump(const ScalarSpace& space);

}  // namespace cdw
