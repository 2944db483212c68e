#pragma once

#include <array>
#include <memory>

#include "cdw/linop.hpp"

namespace cdw {

/// The fifteen conformal generators, charge, projectors and Casimirs on the
/// truncated space. Indices run over mu = 0..3 with metric (+,-,-,-);
/// M[mu][nu] is antisymmetric with both orientations stored.
struct GeneratorSet {
  std::array<LinOp, 4> P;
  std::array<LinOp, 4> K;
  LinOp D;
  std::array<std::array<LinOp, 4>, 4> M;
  LinOp Q;

  /// l(l+1) on each spin sector (rotation Casimir in closed form).
  LinOp C;

  LinOp projector(int l, const ScalarSpace& space) const;
  LinOp projector_geq(int h, const ScalarSpace& space) const;
};

/// Fixed transform convention: |Y>_omega = int dt e^{-i omega t} |Y>_t, so
/// d/dt acts as i*omega on the ket family and t as i*d/domega; the realized
/// wavefunction actions below are the transposes on radial profiles.
inline constexpr const char* kConventionTag = "omega-ket e^{-i w t}; dt -> i w; t -> i d/dw";

GeneratorSet assemble_generators(const ScalarSpace& space);

/// Antiunitary PCT: swaps charge sectors and conjugates all orthonormal
/// coordinates (the basis is real and phases are fixed positive).
StateVector apply_pct(const StateVector& v);

/// Casimir of moeb: (P0 K0 + K0 P0)/2 - D^2, as an expression.
OpFn casimir_mob(const GeneratorSet& g);
/// Casimir of so(3): sum_{k<l} M_kl^2, as an expression.
OpFn casimir_so3(const GeneratorSet& g);

}  // namespace cdw
