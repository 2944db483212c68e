#include "cdw/verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace cdw {

namespace {
constexpr std::array<Real, 4> kEta{1, -1, -1, -1};
const std::array<std::pair<int, int>, 6> kMPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}  // namespace

double residual_max(const std::vector<StateVector>& vecs, const OpFn& actual, const OpFn& expected) {
  Real worst = 0;
  for (const auto& v : vecs) {
    StateVector r = actual(v);
    if (expected) r -= expected(v);
    const Real nv = v.norm();
    worst = std::max(worst, nv > 0 ? r.norm() / nv : r.norm());
  }
  return static_cast<double>(worst);
}

double weak_adjoint_defect(const std::vector<StateVector>& vecs, const OpFn& op, int sign) {
  Real worst = 0;
  for (size_t i = 0; i < vecs.size(); ++i) {
    const StateVector wi = op(vecs[i]);
    for (size_t j = i; j < vecs.size(); ++j) {
      const Complex lhs = vecs[i].dot(op(vecs[j]));
      const Complex rhs = Real(sign) * wi.dot(vecs[j]);
      worst = std::max(worst, std::abs(lhs - rhs) / (vecs[i].norm() * vecs[j].norm()));
    }
  }
  return static_cast<double>(worst);
}

AlgebraOps algebra_ops(const GeneratorSet& g) {
  AlgebraOps ops;
  for (int mu = 0; mu < 4; ++mu) {
    ops.P[mu] = as_fn(g.P[mu]);
    ops.K[mu] = as_fn(g.K[mu]);
  }
  ops.D = as_fn(g.D);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      ops.M[mu][nu] = (mu == nu) ? zero_fn() : as_fn(g.M[mu][nu]);
  return ops;
}

namespace {

OpFn lincomb(std::vector<std::pair<Complex, const OpFn*>> terms) {
  return [terms = std::move(terms)](const StateVector& v) {
    StateVector out(v.space());
    for (const auto& [c, f] : terms) {
      StateVector t = (*f)(v);
      t *= c;
      out += t;
    }
    return out;
  };
}

std::string mu_name(int mu) { return std::to_string(mu); }

}  // namespace

void check_bracket_table(Report& rep, const std::string& prefix, const AlgebraOps& ops,
                         const std::vector<StateVector>& vecs, double tol_full, double tol_mob,
                         double tol_so3, std::map<std::string, std::string> params) {
  auto row = [&](const std::string& id, const OpFn& a, const OpFn& b, OpFn expected, double tol) {
    const double r = residual_max(vecs, commutator_i(a, b), expected);
    rep.add(prefix + id, r, tol, params);
  };

  // i[P_mu, P_nu] = 0 and i[K_mu, K_nu] = 0
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      row("PP." + mu_name(mu) + mu_name(nu), ops.P[mu], ops.P[nu], {}, tol_full);
      row("KK." + mu_name(mu) + mu_name(nu), ops.K[mu], ops.K[nu], {}, tol_full);
    }
  // i[D, P_mu] = P_mu ; i[D, K_mu] = -K_mu
  for (int mu = 0; mu < 4; ++mu) {
    const double t = (mu == 0) ? tol_mob : tol_full;
    row("DP." + mu_name(mu), ops.D, ops.P[mu], lincomb({{Complex(1), &ops.P[mu]}}), t);
    row("DK." + mu_name(mu), ops.D, ops.K[mu], lincomb({{Complex(-1), &ops.K[mu]}}), t);
  }
  // i[P_0, K_0] = -2 D (moeb closes)
  row("PK.00", ops.P[0], ops.K[0], lincomb({{Complex(-2), &ops.D}}), tol_mob);
  // i[P_mu, K_nu] = -2 eta_{mu nu} D + 2 M_{mu nu}, remaining pairs
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == 0 && nu == 0) continue;
      std::vector<std::pair<Complex, const OpFn*>> terms;
      if (mu == nu) terms.push_back({Complex(-2 * kEta[mu]), &ops.D});
      if (mu != nu) terms.push_back({Complex(2), &ops.M[mu][nu]});
      row("PK." + mu_name(mu) + mu_name(nu), ops.P[mu], ops.K[nu], lincomb(std::move(terms)), tol_full);
    }
  // i[D, M] = 0
  for (auto [a, b] : kMPairs)
    row("DM." + mu_name(a) + mu_name(b), ops.D, ops.M[a][b], {}, tol_full);
  // i[P_mu, M_kl] = eta_{mu l} P_k - eta_{mu k} P_l ; same pattern for K
  for (int mu = 0; mu < 4; ++mu) {
    for (auto [k, l] : kMPairs) {
      std::vector<std::pair<Complex, const OpFn*>> tp, tk;
      if (mu == l) tp.push_back({Complex(kEta[mu]), &ops.P[k]});
      if (mu == k) tp.push_back({Complex(-kEta[mu]), &ops.P[l]});
      if (mu == l) tk.push_back({Complex(-kEta[mu]), &ops.K[k]});
      if (mu == k) tk.push_back({Complex(kEta[mu]), &ops.K[l]});
      row("PM." + mu_name(mu) + "." + mu_name(k) + mu_name(l), ops.P[mu], ops.M[k][l],
          lincomb(std::move(tp)), tol_full);
      // i[K_mu, M_kl] = eta_{l mu} K_k - eta_{k mu} K_l
      for (auto& t : tk) t.first = -t.first;
      row("KM." + mu_name(mu) + "." + mu_name(k) + mu_name(l), ops.K[mu], ops.M[k][l],
          lincomb(std::move(tk)), tol_full);
    }
  }
  // i[M_kl, M_mn] = eta_km M_ln - eta_lm M_kn - eta_kn M_lm + eta_ln M_km
  for (auto [k, l] : kMPairs) {
    for (auto [m, n] : kMPairs) {
      if (std::pair(k, l) >= std::pair(m, n)) continue;
      std::vector<std::pair<Complex, const OpFn*>> terms;
      auto put = [&](int i, int j, Real c) {
        if (i != j && c != 0) terms.push_back({Complex(c), &ops.M[i][j]});
      };
      if (k == m) put(l, n, kEta[k]);
      if (l == m) put(k, n, -kEta[l]);
      if (k == n) put(l, m, -kEta[k]);
      if (l == n) put(k, m, kEta[l]);
      const bool pure_rot = k > 0 && m > 0;
      row("MM." + mu_name(k) + mu_name(l) + "." + mu_name(m) + mu_name(n), ops.M[k][l], ops.M[m][n],
          lincomb(std::move(terms)), pure_rot ? tol_so3 : tol_full);
    }
  }
}

double l0_interior_min_eigenvalue(const ScalarSpace& space, int l) {
  const int n = space.n_radial();
  const MatrixR& dw = space.grid().diff();
  const VectorR& w = space.grid().nodes();
  MatrixR wd = MatrixR::Zero(n, n);
  wd.diagonal() = w;
  const MatrixR k0 = -(wd * dw * dw + Real(2 * (l + 1)) * dw);
  MatrixR l0 = (wd + k0) / 2;
  // orthonormal coordinates
  MatrixR sc = MatrixR::Zero(n, n), sci = MatrixR::Zero(n, n);
  sc.diagonal() = space.radial_scale(l);
  sci.diagonal() = space.radial_scale(l).cwiseInverse();
  MatrixR l0on = sc * l0 * sci;
  MatrixR l0sym = (l0on + l0on.transpose()) / 2;

  // interior profile subspace: bump-damped polynomials
  const int kCols = 12;
  const VectorC bump = interior_bump(space);
  MatrixR basis(n, kCols);
  for (int d = 0; d < kCols; ++d)
    for (int j = 0; j < n; ++j)
      basis(j, d) = space.radial_scale(l)[j] * bump[j].real() * std::pow(w[j], Real(d));
  Eigen::HouseholderQR<MatrixR> qr(basis);
  MatrixR q = qr.householderQ() * MatrixR::Identity(n, kCols);
  MatrixR proj = q.transpose() * l0sym * q;
  Eigen::SelfAdjointEigenSolver<MatrixR> es(proj);
  return static_cast<double>(es.eigenvalues().minCoeff());
}

Report verify_scalar_suite(const ScalarSpace& space, const GeneratorSet& g,
                           const std::vector<StateVector>& vecs, const Tolerances& tol) {
  Report rep;
  AlgebraOps ops = algebra_ops(g);
  check_bracket_table(rep, "scalar.bracket.", ops, vecs, tol.bracket, tol.mob_bracket, tol.so3_bracket);

  // (ad_P0)^3 X = 0 and (ad_K0)^3 X = 0 on the m-part
  auto ad3 = [&](const OpFn& h, const OpFn& x) {
    return commutator_i(h, commutator_i(h, commutator_i(h, x)));
  };
  for (int k = 1; k <= 3; ++k) {
    for (auto& [name, x] : std::vector<std::pair<std::string, OpFn>>{
             {"P" + std::to_string(k), ops.P[k]},
             {"M0" + std::to_string(k), ops.M[0][k]},
             {"K" + std::to_string(k), ops.K[k]}}) {
      rep.add("scalar.ad3.P0." + name, residual_max(vecs, ad3(ops.P[0], x)), tol.bracket);
      rep.add("scalar.ad3.K0." + name, residual_max(vecs, ad3(ops.K[0], x)), tol.bracket);
    }
  }

  // hermiticity (weak, Gram adjoint = plain adjoint in orthonormal coordinates)
  const std::vector<StateVector> herm_vecs(vecs.begin(), vecs.begin() + std::min<size_t>(vecs.size(), 6));
  for (int mu = 0; mu < 4; ++mu) {
    rep.add("scalar.herm.P" + std::to_string(mu), weak_adjoint_defect(herm_vecs, ops.P[mu], +1),
            tol.hermiticity);
    rep.add("scalar.herm.K" + std::to_string(mu), weak_adjoint_defect(herm_vecs, ops.K[mu], +1),
            tol.hermiticity);
  }
  rep.add("scalar.herm.D", weak_adjoint_defect(herm_vecs, ops.D, +1), tol.hermiticity);
  for (auto [a, b] : kMPairs)
    rep.add("scalar.herm.M" + std::to_string(a) + std::to_string(b),
            weak_adjoint_defect(herm_vecs, ops.M[a][b], +1), tol.hermiticity);

  // Casimir equality: both Casimirs act as l(l+1) on interior spin-l states
  OpFn cas_mob = casimir_mob(g);
  OpFn cas_rot = casimir_so3(g);
  for (int l = 0; l <= space.l_max() - 2; ++l) {
    TestVectorOptions o;
    o.count = 2;
    o.seed = 77 + l;
    o.min_ell = l;
    o.delta_ell = space.l_max() - l;
    auto lv = interior_test_vectors(space, o);
    const Complex ev(Real(l * (l + 1)), 0);
    auto eigen_expected = [ev](const StateVector& v) {
      StateVector r = v;
      r *= ev;
      return r;
    };
    rep.add("scalar.casimir.mob.l=" + std::to_string(l), residual_max(lv, cas_mob, eigen_expected),
            tol.casimir, {{"l", std::to_string(l)}});
    rep.add("scalar.casimir.so3.l=" + std::to_string(l), residual_max(lv, cas_rot, eigen_expected),
            tol.casimir_so3, {{"l", std::to_string(l)}});
  }

  // mass shell: sum_k P_k^2 = P0^2
  OpFn mass_shell_lhs = [&g](const StateVector& v) {
    StateVector out(v.space());
    for (int k = 1; k <= 3; ++k) out += g.P[k](g.P[k](v));
    return out;
  };
  rep.add("scalar.mass_shell", residual_max(vecs, mass_shell_lhs, [&g](const StateVector& v) {
            return g.P[0](g.P[0](v));
          }),
          tol.mass_shell);

  // charge and PCT relations
  OpFn q = as_fn(g.Q);
  rep.add("scalar.Q.squared", residual_max(vecs, compose(q, q), identity_fn()), tol.pct);
  OpFn j = [](const StateVector& v) { return apply_pct(v); };
  rep.add("scalar.pct.J_squared", residual_max(vecs, compose(j, j), identity_fn()), tol.pct);
  auto pct_row = [&](const std::string& id, const OpFn& x, int sign) {
    OpFn lhs = compose(j, x);
    OpFn rhs = compose(x, j);
    const double r = residual_max(vecs, lhs, sign > 0 ? rhs : scale_fn(Complex(-1), rhs));
    rep.add("scalar.pct." + id, r, tol.pct);
  };
  for (int mu = 0; mu < 4; ++mu) {
    pct_row("JP" + std::to_string(mu), ops.P[mu], +1);
    pct_row("JK" + std::to_string(mu), ops.K[mu], +1);
  }
  pct_row("JD", ops.D, -1);
  for (auto [a, b] : kMPairs) pct_row("JM" + std::to_string(a) + std::to_string(b), ops.M[a][b], -1);
  pct_row("JQ", q, -1);

  // projector identities
  {
    double worst_orth = 0, worst_sum = 0;
    std::vector<LinOp> es;
    for (int l = 0; l <= space.l_max(); ++l) es.push_back(g.projector(l, space));
    for (const auto& v : vecs) {
      StateVector s(space);
      for (int l = 0; l <= space.l_max(); ++l) {
        s += es[l](v);
        for (int lp = 0; lp <= space.l_max(); ++lp) {
          StateVector r = es[l](es[lp](v));
          if (l == lp)
            r -= es[l](v);
          worst_orth = std::max(worst_orth, static_cast<double>(r.norm()));
        }
      }
      s -= v;
      worst_sum = std::max(worst_sum, static_cast<double>(s.norm()));
    }
    rep.add("scalar.projector.orthogonality", worst_orth, 1e-14);
    rep.add("scalar.projector.resolution_of_identity", worst_sum, 1e-14);
  }

  // L0 lower bound per spin sector (soft truncation bound)
  for (int l = 0; l <= space.l_max(); ++l) {
    const double ev = l0_interior_min_eigenvalue(space, l);
    const double bound = l + 1 - tol.l0_slack;
    rep.add_exceeds("scalar.L0.lower_bound.l=" + std::to_string(l), ev, bound,
                    {{"l", std::to_string(l)}, {"bound", std::to_string(bound)}});
  }

  // symmetric-space rows: [m, m] brackets land in h = span{P0, D, K0, M_kl};
  // the residual against the h-side combination doubles as the projection
  // defect onto the m-block.
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      OpFn exp_pm = (k == l) ? scale_fn(Complex(-1), ops.P[0]) : zero_fn();
      rep.add("scalar.symmetric_space.PkM0l." + std::to_string(k) + std::to_string(l),
              residual_max(vecs, commutator_i(ops.P[k], ops.M[0][l]), exp_pm), tol.bracket);
      OpFn exp_km = (k == l) ? scale_fn(Complex(-1), ops.K[0]) : zero_fn();
      rep.add("scalar.symmetric_space.KkM0l." + std::to_string(k) + std::to_string(l),
              residual_max(vecs, commutator_i(ops.K[k], ops.M[0][l]), exp_km), tol.bracket);
    }
  }

  rep.sort_by_id();
  return rep;
}

}  // namespace cdw
