#include "cdw/space.hpp"

#include <Eigen/Cholesky>
#include <stdexcept>

namespace cdw {

StateVector::StateVector(const ScalarSpace& space) : space_(&space) {
  comp_.reserve(2 * (space.l_max() + 1));
  for (int cs = 0; cs < 2; ++cs)
    for (int l = 0; l <= space.l_max(); ++l)
      comp_.push_back(MatrixC::Zero(2 * l + 1, space.n_radial()));
}

MatrixC& StateVector::block(int cs, int l) { return comp_[cs * (space_->l_max() + 1) + l]; }
const MatrixC& StateVector::block(int cs, int l) const { return comp_[cs * (space_->l_max() + 1) + l]; }

Real StateVector::norm() const {
  Real s = 0;
  for (const auto& b : comp_) s += b.squaredNorm();
  return std::sqrt(s);
}

Complex StateVector::dot(const StateVector& o) const {
  Complex s = 0;
  for (size_t i = 0; i < comp_.size(); ++i)
    s += (comp_[i].conjugate().cwiseProduct(o.comp_[i])).sum();
  return s;
}

StateVector& StateVector::operator+=(const StateVector& o) {
  for (size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& o) {
  for (size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
  return *this;
}

StateVector& StateVector::operator*=(Complex c) {
  for (auto& b : comp_) b *= c;
  return *this;
}

StateVector StateVector::project_spin(int l) const {
  StateVector r(*space_);
  for (int cs = 0; cs < 2; ++cs) r.block(cs, l) = block(cs, l);
  return r;
}

StateVector StateVector::project_spin_geq(int h) const {
  StateVector r(*space_);
  for (int cs = 0; cs < 2; ++cs)
    for (int l = h; l <= space_->l_max(); ++l) r.block(cs, l) = block(cs, l);
  return r;
}

StateVector StateVector::project_charge(int charge) const {
  StateVector r(*space_);
  const int cs = charge > 0 ? 0 : 1;
  for (int l = 0; l <= space_->l_max(); ++l) r.block(cs, l) = block(cs, l);
  return r;
}

ScalarSpace::ScalarSpace(int l_max, RadialGrid grid) : l_max_(l_max), grid_(std::move(grid)) {
  if (l_max < 2) throw std::invalid_argument("ScalarSpace: l_max < 2 is too small for the verification suites");
  const int n = grid_.size();
  for (int l = 0; l <= l_max_; ++l) {
    VectorR s(n);
    for (int j = 0; j < n; ++j)
      s[j] = std::sqrt(grid_.quad_weights()[j] * std::pow(grid_.nodes()[j], Real(2 * l + 1)));
    s_.push_back(std::move(s));

    const AngularBasis& basis = harmonic_basis(l);
    const int d = basis.dim();
    MatrixR g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = to_real(basis.gram()[i][j]);
    Eigen::LLT<MatrixR> llt(g);
    if (llt.info() != Eigen::Success) throw std::runtime_error("ScalarSpace: angular Gram not positive definite");
    MatrixR lt = llt.matrixL().transpose();
    chol_t_.push_back(lt);
    chol_t_inv_.push_back(lt.inverse());
  }
}

long ScalarSpace::dimension() const {
  long d = 0;
  for (int l = 0; l <= l_max_; ++l) d += 2 * l + 1;
  return 2 * d * grid_.size();
}

MatrixC ScalarSpace::ang_on(const std::vector<std::vector<RationalC>>& raw, int lo, int li) const {
  const int rows = 2 * lo + 1, cols = 2 * li + 1;
  MatrixC a(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a(r, c) = raw[r][c].to_complex();
  return chol_t_[lo].cast<Complex>() * a * chol_t_inv_[li].cast<Complex>();
}

MatrixC ScalarSpace::rad_on(const MatrixR& raw, int lo, int li) const {
  const int n = grid_.size();
  MatrixC r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = Complex(s_[lo][i] * raw(i, j) / s_[li][j], 0);
  return r;
}

MatrixC ScalarSpace::rad_on_diag(const VectorR& diag_raw) const {
  return diag_raw.cast<Complex>().asDiagonal();
}

VectorC ScalarSpace::ang_to_on(int l, const VectorC& raw) const {
  return chol_t_[l].cast<Complex>() * raw;
}

StateVector ScalarSpace::state_from_profile(int charge, int l, const VectorC& angular_raw,
                                            const VectorC& samples) const {
  StateVector v(*this);
  VectorC c = ang_to_on(l, angular_raw);
  VectorC r = samples.cwiseProduct(s_[l].cast<Complex>());
  v.block(charge > 0 ? 0 : 1, l) = c * r.transpose();
  return v;
}

std::uint64_t DeterministicRng::next() {
  // xorshift* stream; stable across platforms
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

Real DeterministicRng::uniform() {
  return static_cast<Real>(next() >> 11) / static_cast<Real>(1ULL << 53);
}

Complex DeterministicRng::uniform_complex() {
  Real re = 2 * uniform() - 1;
  Real im = 2 * uniform() - 1;
  return {re, im};
}

VectorC interior_bump(const ScalarSpace& space) {
  const auto& w = space.grid().nodes();
  const Real a = space.grid().omega_min(), b = space.grid().omega_max();
  const Real scale = std::pow((b - a) / 2, Real(4));
  VectorC bump(w.size());
  for (int j = 0; j < w.size(); ++j) {
    Real t = (w[j] - a) * (w[j] - a) * (b - w[j]) * (b - w[j]) / scale;
    bump[j] = Complex(t, 0);
  }
  return bump;
}

std::vector<StateVector> interior_test_vectors(const ScalarSpace& space, const TestVectorOptions& opt) {
  const int l_hi = space.l_max() - opt.delta_ell;
  if (l_hi < opt.min_ell)
    throw std::invalid_argument("interior_test_vectors: margins exceed the truncation");
  const VectorC bump = interior_bump(space);
  std::vector<StateVector> out;
  out.reserve(opt.count);
  for (int t = 0; t < opt.count; ++t) {
    DeterministicRng rng(opt.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(t) + 1);
    StateVector v(space);
    for (int cs = 0; cs < 2; ++cs) {
      for (int l = opt.min_ell; l <= l_hi; ++l) {
        MatrixC& blk = v.block(cs, l);
        for (int a = 0; a < 2 * l + 1; ++a) {
          VectorC g = VectorC::Zero(space.n_radial());
          for (int d = 0; d <= opt.profile_degree; ++d) {
            Complex c = rng.uniform_complex();
            for (int j = 0; j < space.n_radial(); ++j)
              g[j] += c * std::pow(space.grid().nodes()[j], Real(d));
          }
          for (int j = 0; j < space.n_radial(); ++j)
            blk(a, j) = space.radial_scale(l)[j] * g[j] * bump[j];
        }
      }
    }
    Real n = v.norm();
    if (n > 0) v *= Complex(1 / n, 0);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cdw
