#include "cdw/radial.hpp"

#include <cmath>
#include <stdexcept>

namespace cdw {

namespace {

// P_n and P_n' at x by the three-term recurrence
std::pair<Real, Real> legendre(int n, Real x) {
  Real p0 = 1, p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  Real dp = n * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

}  // namespace

RadialGrid::RadialGrid(int n, Real omega_min, Real omega_max)
    : omega_min_(omega_min), omega_max_(omega_max) {
  if (n < 8) throw std::invalid_argument("RadialGrid: need at least 8 nodes");
  if (!(omega_min > 0) || !(omega_min < omega_max))
    throw std::invalid_argument("RadialGrid: require 0 < omega_min < omega_max");

  // Legendre roots by Newton from the Chebyshev-like initial guess.
  VectorR x(n), w(n);
  for (int i = 0; i < n; ++i) {
    Real xi = std::cos(static_cast<Real>(M_PI) * (i + Real(0.75)) / (n + Real(0.5)));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre(n, xi);
      Real dx = p / dp;
      xi -= dx;
      if (std::abs(dx) < Real(1e-20)) break;
    }
    auto [p, dp] = legendre(n, xi);
    x[i] = xi;
    w[i] = 2 / ((1 - xi * xi) * dp * dp);
  }
  nodes_.resize(n);
  weights_.resize(n);
  const Real half = (omega_max - omega_min) / 2, mid = (omega_max + omega_min) / 2;
  for (int i = 0; i < n; ++i) {
    nodes_[i] = mid + half * x[i];
    weights_[i] = half * w[i];
  }

  // barycentric weights, normalized on the fly to avoid over/underflow
  VectorR lam = VectorR::Ones(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j) lam[i] /= (nodes_[i] - nodes_[j]);
  }
  diff_.setZero(n, n);
  for (int i = 0; i < n; ++i) {
    Real rowsum = 0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      diff_(i, j) = (lam[j] / lam[i]) / (nodes_[i] - nodes_[j]);
      rowsum += diff_(i, j);
    }
    diff_(i, i) = -rowsum;  // exact on constants
  }
}

Real RadialGrid::integrate(const VectorR& samples) const {
  return weights_.dot(samples);
}

VectorR radial_gram(int l, const RadialGrid& grid) {
  if (l < 0) throw std::invalid_argument("radial_gram: l < 0");
  const int n = grid.size();
  VectorR d(n);
  for (int j = 0; j < n; ++j) d[j] = grid.quad_weights()[j] * std::pow(grid.nodes()[j], Real(2 * l + 1));
  return d;
}

VectorR mult_power(int s, const RadialGrid& grid) {
  if (s < 0 && !(grid.omega_min() > 0))
    throw std::invalid_argument("mult_power: negative power on a grid touching 0");
  const int n = grid.size();
  VectorR d(n);
  for (int j = 0; j < n; ++j) d[j] = std::pow(grid.nodes()[j], Real(s));
  return d;
}

}  // namespace cdw
