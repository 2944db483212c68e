#pragma once

#include "cdw/generators.hpp"
#include "cdw/report.hpp"

namespace cdw {

/// Check tolerances; defaults are the pinned acceptance values.
struct Tolerances {
  double bracket = 1e-7;
  double mob_bracket = 1e-8;
  double so3_bracket = 1e-10;
  double hermiticity = 1e-8;
  double casimir = 1e-8;
  double casimir_so3 = 1e-10;
  double mass_shell = 1e-8;
  double pct = 1e-10;
  double l0_slack = 0.1;

  double deformed_table = 1e-7;
  double deformed_pct = 1e-9;
  double deformed_mass_shell = 1e-7;
  double field_eq = 1e-7;
  double negative_control = 1e-3;  // lower bound for the perturbed run

  double maxwell_strong = 1e-7;
  double maxwell_weak_unitary = 1e-6;
  double maxwell_upku = 1e-6;
  double maxwell_tgrad = 1e-8;
  double maxwell_tvcv = 1e-7;
  double maxwell_adjoint = 1e-8;
  double maxwell_intertwine_weak = 1e-7;
  double maxwell_psd = 1e-9;
  double maxwell_null_long = 1e-9;
  double maxwell_null_curl = 1e-8;
  double maxwell_pimij = 1e-8;
  double alpha_rel = 1e-4;
  double alpha_profile = 1e-6;
  double alpha_antisym = 1e-6;

  double mass_uell = 1e-10;
  double mass_uell_pointwise = 1e-13;
  double mass_mass_shell = 1e-8;
  double mass_md_mc = 1e-7;
  double mass_hermiticity = 1e-8;
  double mass_p0_boost = 1e-7;
  double mass_intermediate = 1e-7;
  double mass_closure = 1e-6;
  double mass_pauli_lubanski = 1e-8;
  double mass_chain = 1e-10;
};

/// max over test vectors of ||(actual - expected) v|| / ||v||.
double residual_max(const std::vector<StateVector>& vecs, const OpFn& actual, const OpFn& expected = {});

/// max over vector pairs of |<f, A g> - s <A f, g>| (s = +1 hermitian,
/// -1 antihermitian), with unit-norm vectors.
double weak_adjoint_defect(const std::vector<StateVector>& vecs, const OpFn& op, int sign);

/// Conformal generators (possibly deformed in the m-part) presented to the
/// bracket-table driver.
struct AlgebraOps {
  std::array<OpFn, 4> P;
  std::array<OpFn, 4> K;
  OpFn D;
  std::array<std::array<OpFn, 4>, 4> M;  // antisymmetric, both orientations
};

AlgebraOps algebra_ops(const GeneratorSet& g);

/// Every bracket of the so(2,4) table as residuals on the test vectors,
/// reported one row per (pair). Rows inside moeb use tol_mob, rows inside
/// so(3) use tol_so3, everything else tol_full.
void check_bracket_table(Report& rep, const std::string& prefix, const AlgebraOps& ops,
                         const std::vector<StateVector>& vecs, double tol_full, double tol_mob,
                         double tol_so3, std::map<std::string, std::string> params = {});

/// Undeformed verification suite: bracket table, (ad_P0)^3 = (ad_K0)^3 = 0,
/// hermiticity, Casimir equality, mass shell, charge/PCT relations,
/// projector identities, L0 spectral lower bound, symmetric-space rows.
Report verify_scalar_suite(const ScalarSpace& space, const GeneratorSet& g,
                           const std::vector<StateVector>& vecs, const Tolerances& tol);

/// Smallest eigenvalue of (P0+K0)/2 restricted to the interior radial
/// subspace of the spin-l sector (Rayleigh projection onto bump-damped
/// polynomial profiles).
double l0_interior_min_eigenvalue(const ScalarSpace& space, int l);

}  // namespace cdw
