#include "cdw/generators.hpp"

namespace cdw {

namespace {

MatrixR diag_matrix(const VectorR& d) {
  MatrixR m = MatrixR::Zero(d.size(), d.size());
  m.diagonal() = d;
  return m;
}

}  // namespace

GeneratorSet assemble_generators(const ScalarSpace& space) {
  GeneratorSet g;
  const int lmax = space.l_max();
  const int n = space.n_radial();
  const MatrixR& dw = space.grid().diff();
  const VectorR& w = space.grid().nodes();
  const MatrixR wd = diag_matrix(w);
  const MatrixR w2d = diag_matrix(w.cwiseProduct(w));
  const MatrixR id = MatrixR::Identity(n, n);

  g.P[0] = LinOp(Hermiticity::kHermitian);
  g.D = LinOp(Hermiticity::kHermitian);
  g.K[0] = LinOp(Hermiticity::kHermitian);
  g.Q = LinOp(Hermiticity::kHermitian);
  g.C = LinOp(Hermiticity::kHermitian);
  for (int k = 1; k <= 3; ++k) {
    g.P[k] = LinOp(Hermiticity::kHermitian);
    g.K[k] = LinOp(Hermiticity::kHermitian);
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) g.M[mu][nu] = LinOp(Hermiticity::kHermitian);

  for (int cs = 0; cs < 2; ++cs) {
    for (int l = 0; l <= lmax; ++l) {
      const BlockKey diag{cs, l, cs, l};
      const int dim = 2 * l + 1;
      const MatrixC ia = MatrixC::Identity(dim, dim);

      // moeb triple on the radial profile: P0 = w, D = -i(w d/dw + l + 1),
      // K0 = -(w d^2/dw^2 + 2(l+1) d/dw); all w.r.t. the w^(2l+1) measure.
      g.P[0].add_term(diag, ia, space.rad_on(wd, l, l));
      g.D.add_term(diag, ia, -kI * space.rad_on(wd * dw + Real(l + 1) * id, l, l));
      g.K[0].add_term(diag, ia, -space.rad_on(wd * dw * dw + Real(2 * (l + 1)) * dw, l, l));
      g.Q.add_term(diag, (cs == 0 ? Real(1) : Real(-1)) * ia, space.rad_on(id, l, l));
      g.C.add_term(diag, Real(l * (l + 1)) * ia, space.rad_on(id, l, l));

      // rotations: exact angular matrices, radial identity
      for (int k = 1; k <= 3; ++k)
        for (int kk = k + 1; kk <= 3; ++kk)
          g.M[k][kk].add_term(diag, -kI * space.ang_on(rot_matrix(k - 1, kk - 1, l), l, l),
                              space.rad_on(id, l, l));

      // m-part: |p_k Y> splits into a harmonic upper part with radial
      // identity and the gradient part with radial w^2/(2l+1).
      for (int k = 1; k <= 3; ++k) {
        if (l + 1 <= lmax) {
          const BlockKey up{cs, l + 1, cs, l};
          const MatrixC a = space.ang_on(up_matrix(k - 1, l), l + 1, l);
          g.P[k].add_term(up, a, space.rad_on(id, l + 1, l));
          g.M[0][k].add_term(up, a, -kI * space.rad_on(dw, l + 1, l));
          g.K[k].add_term(up, a, space.rad_on(dw * dw, l + 1, l));
        }
        if (l >= 1) {
          const BlockKey low{cs, l - 1, cs, l};
          const MatrixC a = space.ang_on(low_matrix(k - 1, l), l - 1, l);
          const Real inv = Real(1) / Real(2 * l + 1);
          g.P[k].add_term(low, a, space.rad_on(inv * w2d, l - 1, l));
          g.M[0][k].add_term(low, a, -kI * space.rad_on(inv * w2d * dw + wd, l - 1, l));
          g.K[k].add_term(low, a,
                          space.rad_on(inv * w2d * dw * dw + 2 * wd * dw + Real(2 * l) * id, l - 1, l));
        }
      }
    }
  }
  for (int k = 1; k <= 3; ++k)
    for (int kk = 1; kk <= 3; ++kk)
      if (kk < k) g.M[k][kk] = g.M[kk][k].scaled(Real(-1));
  for (int k = 1; k <= 3; ++k) g.M[k][0] = g.M[0][k].scaled(Real(-1));
  return g;
}

LinOp GeneratorSet::projector(int l, const ScalarSpace& space) const {
  LinOp e(Hermiticity::kHermitian);
  const int n = space.n_radial();
  for (int cs = 0; cs < 2; ++cs)
    e.add_term({cs, l, cs, l}, MatrixC::Identity(2 * l + 1, 2 * l + 1), MatrixC::Identity(n, n));
  return e;
}

LinOp GeneratorSet::projector_geq(int h, const ScalarSpace& space) const {
  LinOp e(Hermiticity::kHermitian);
  const int n = space.n_radial();
  for (int cs = 0; cs < 2; ++cs)
    for (int l = h; l <= space.l_max(); ++l)
      e.add_term({cs, l, cs, l}, MatrixC::Identity(2 * l + 1, 2 * l + 1), MatrixC::Identity(n, n));
  return e;
}

StateVector apply_pct(const StateVector& v) {
  const ScalarSpace& sp = v.space();
  StateVector out(sp);
  for (int l = 0; l <= sp.l_max(); ++l) {
    out.block(0, l) = v.block(1, l).conjugate();
    out.block(1, l) = v.block(0, l).conjugate();
  }
  return out;
}

OpFn casimir_mob(const GeneratorSet& g) {
  const LinOp& p0 = g.P[0];
  const LinOp& k0 = g.K[0];
  const LinOp& d = g.D;
  return [&p0, &k0, &d](const StateVector& v) {
    StateVector out = p0(k0(v));
    out += k0(p0(v));
    out *= Complex(Real(0.5), 0);
    out -= d(d(v));
    return out;
  };
}

OpFn casimir_so3(const GeneratorSet& g) {
  return [&g](const StateVector& v) {
    StateVector out(v.space());
    for (int k = 1; k <= 3; ++k)
      for (int kk = k + 1; kk <= 3; ++kk) out += g.M[k][kk](g.M[k][kk](v));
    return out;
  };
}

}  // namespace cdw
