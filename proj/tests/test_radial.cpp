#include <catch_amalgamated.hpp>

#include "cdw/radial.hpp"

using namespace cdw;

namespace {
VectorR sample(const RadialGrid& g, auto f) {
  VectorR v(g.size());
  for (int j = 0; j < g.size(); ++j) v[j] = f(g.nodes()[j]);
  return v;
}
}  // namespace

TEST_CASE("grid construction validates inputs") {
  REQUIRE_THROWS(RadialGrid(4, 0.1L, 10.0L));
  REQUIRE_THROWS(RadialGrid(16, 0.0L, 1.0L));
  REQUIRE_THROWS(RadialGrid(16, -1.0L, 1.0L));
  REQUIRE_THROWS(RadialGrid(16, 2.0L, 1.0L));
}

TEST_CASE("quadrature integrates polynomials to near machine accuracy") {
  RadialGrid g(16, 0.1L, 1.0L);
  // int_{0.1}^{1} w dw = (1 - 0.01)/2 = 0.495
  const double v = static_cast<double>(g.integrate(sample(g, [](Real w) { return w; })));
  REQUIRE(std::abs(v - 0.495) < 1e-12);
  // degree 2N-1 still exact: int w^31
  RadialGrid g2(16, 0.5L, 2.0L);
  const double got = static_cast<double>(g2.integrate(sample(g2, [](Real w) { return std::pow(w, Real(31)); })));
  const double want = (std::pow(2.0, 32) - std::pow(0.5, 32)) / 32;
  REQUIRE(std::abs(got - want) / want < 1e-12);
}

TEST_CASE("differentiation matrix is exact on polynomial samples") {
  RadialGrid g(24, 0.1L, 10.0L);
  // constants
  VectorR d0 = g.diff() * sample(g, [](Real) { return Real(1); });
  REQUIRE(static_cast<double>(d0.cwiseAbs().maxCoeff()) < 1e-13);
  // d/dw w^3 = 3 w^2
  VectorR d3 = g.diff() * sample(g, [](Real w) { return w * w * w; });
  VectorR want = sample(g, [](Real w) { return 3 * w * w; });
  REQUIRE(static_cast<double>((d3 - want).cwiseAbs().maxCoeff() / want.cwiseAbs().maxCoeff()) < 1e-10);
  // d/dw w^2 = 2 w
  VectorR d2 = g.diff() * sample(g, [](Real w) { return w * w; });
  VectorR want2 = sample(g, [](Real w) { return 2 * w; });
  REQUIRE(static_cast<double>((d2 - want2).cwiseAbs().maxCoeff()) < 1e-10);
}

TEST_CASE("canonical commutator [w, d/dw] = -1 on polynomial samples") {
  RadialGrid g(32, 0.1L, 10.0L);
  const MatrixR& d = g.diff();
  for (int deg = 0; deg <= g.size() - 3; deg += 7) {
    VectorR f = sample(g, [&](Real w) { return std::pow(w / 5, Real(deg)); });
    VectorR lhs = g.nodes().cwiseProduct((d * f).eval()) - d * g.nodes().cwiseProduct(f).eval();
    REQUIRE(static_cast<double>((lhs + f).cwiseAbs().maxCoeff() / f.cwiseAbs().maxCoeff()) < 1e-8);
  }
}

TEST_CASE("radial gram diagonal and scaling identity") {
  RadialGrid g(20, 1e-6L, 1.0L);
  // l=0: int w dw -> 1/2 ; l=1: int w^3 dw -> 1/4
  const double g0 = static_cast<double>(radial_gram(0, g).sum());
  const double g1 = static_cast<double>(radial_gram(1, g).sum());
  REQUIRE(std::abs(g0 - 0.5) < 1e-10);
  REQUIRE(std::abs(g1 - 0.25) < 1e-10);
  REQUIRE(static_cast<double>(radial_gram(3, g).minCoeff()) > 0);

  // RadialGram(l) = RadialGram(0) * w^(2l) exactly as diagonals
  RadialGrid g2(24, 0.1L, 10.0L);
  for (int l : {1, 3, 5}) {
    VectorR lhs = radial_gram(l, g2);
    VectorR rhs = radial_gram(0, g2).cwiseProduct(mult_power(2 * l, g2));
    REQUIRE(static_cast<double>((lhs - rhs).cwiseAbs().maxCoeff() / lhs.cwiseAbs().maxCoeff()) < 1e-15);
  }
}

TEST_CASE("power multipliers") {
  RadialGrid g(16, 0.1L, 10.0L);
  REQUIRE(static_cast<double>((mult_power(0, g) - VectorR::Ones(16)).cwiseAbs().maxCoeff()) == 0.0);
  VectorR prod = mult_power(2, g).cwiseProduct(mult_power(-2, g));
  REQUIRE(static_cast<double>((prod - VectorR::Ones(16)).cwiseAbs().maxCoeff()) < 1e-12);
}

TEST_CASE("zero function has zero gram norm") {
  RadialGrid g(16, 0.1L, 10.0L);
  VectorR z = VectorR::Zero(16);
  REQUIRE(static_cast<double>(radial_gram(2, g).cwiseProduct(z.cwiseAbs2()).sum()) == 0.0);
}
