#include <catch_amalgamated.hpp>

#include "cdw/polynomial.hpp"

using namespace cdw;

namespace {

// independent differentiation oracle on raw monomial maps
Poly3 diff_oracle(const Poly3& p, int k) {
  Poly3 r;
  for (const auto& [m, c] : p.terms()) {
    if (m[k] == 0) continue;
    Mono n = m;
    n[k] -= 1;
    RationalC cc = c;
    cc.re *= m[k];
    cc.im *= m[k];
    r.add_term(n, cc);
  }
  return r;
}

// brute-force sphere moment by numerical quadrature (Gauss in cos(theta),
// trapezoid in phi), used as the independent oracle for sphere_inner
double sphere_moment_quadrature(int a, int b, int c) {
  const int nt = 200, np = 400;
  // Gauss-Legendre on [-1,1] via Newton
  std::vector<double> x(nt), w(nt);
  for (int i = 0; i < nt; ++i) {
    double xi = std::cos(M_PI * (i + 0.75) / (nt + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = xi;
      for (int k = 2; k <= nt; ++k) {
        double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = nt * (xi * p1 - p0) / (xi * xi - 1);
      double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1, p1 = xi;
    for (int k = 2; k <= nt; ++k) {
      double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = nt * (xi * p1 - p0) / (xi * xi - 1);
    x[i] = xi;
    w[i] = 2 / ((1 - xi * xi) * dp * dp);
  }
  double s = 0;
  for (int i = 0; i < nt; ++i) {
    const double ct = x[i], st = std::sqrt(1 - ct * ct);
    for (int j = 0; j < np; ++j) {
      const double phi = 2 * M_PI * j / np;
      const double nx = st * std::cos(phi), ny = st * std::sin(phi);
      s += w[i] * (2 * M_PI / np) * std::pow(nx, a) * std::pow(ny, b) * std::pow(ct, c);
    }
  }
  return s / (4 * M_PI);
}

}  // namespace

TEST_CASE("monomial arithmetic and homogeneity") {
  Poly3 p = Poly3::variable(0) * Poly3::variable(1) + Poly3::variable(2) * Poly3::variable(2);
  REQUIRE(p.degree() == 2);
  REQUIRE(p.homogeneous());
  Poly3 q = p + Poly3::one();
  REQUIRE_FALSE(q.homogeneous());
  REQUIRE((p - p).is_zero());
}

TEST_CASE("derivatives match the independent oracle") {
  Poly3 y = Poly3::monomial({0, 0, 2}, RationalC(1)) - Poly3::radius_sq() * RationalC(Rational(1, 3));
  // d1 (p3^2 - |p|^2/3) = -(2/3) p1
  Poly3 d = y.derivative(0);
  REQUIRE(d == Poly3::variable(0) * RationalC(Rational(-2, 3)));
  for (int k = 0; k < 3; ++k) {
    Poly3 p = Poly3::variable(0) * Poly3::variable(1) * Poly3::variable(1) + Poly3::variable(2);
    REQUIRE(p.derivative(k) == diff_oracle(p, k));
  }
  REQUIRE(Poly3::one().derivative(2).is_zero());
  REQUIRE(Poly3::variable(2).derivative(2) == Poly3::one());
}

TEST_CASE("harmonic decomposition reproduces the polynomial exactly") {
  // p3^2 = (p3^2 - |p|^2/3) + |p|^2 * 1/3
  Poly3 p = Poly3::monomial({0, 0, 2}, RationalC(1));
  auto dec = harmonic_decompose(p);
  REQUIRE(dec.size() == 2);
  REQUIRE(dec[0].first == 0);
  REQUIRE(dec[0].second == p - Poly3::radius_sq() * RationalC(Rational(1, 3)));
  REQUIRE(dec[1].first == 1);
  REQUIRE(dec[1].second == Poly3::one() * RationalC(Rational(1, 3)));

  // |p|^2 -> single j=1 term
  auto dec2 = harmonic_decompose(Poly3::radius_sq());
  REQUIRE(dec2.size() == 1);
  REQUIRE(dec2[0].first == 1);
  REQUIRE(dec2[0].second == Poly3::one());

  // p1 p2 already harmonic
  auto dec3 = harmonic_decompose(Poly3::variable(0) * Poly3::variable(1));
  REQUIRE(dec3.size() == 1);
  REQUIRE(dec3[0].first == 0);

  REQUIRE_THROWS(harmonic_decompose(Poly3::one() + Poly3::variable(0)));
}

TEST_CASE("decomposition round-trips all monomials of degree <= 8") {
  for (int deg = 0; deg <= 8; ++deg) {
    for (int a = 0; a <= deg; ++a) {
      for (int b = 0; a + b <= deg; ++b) {
        const int c = deg - a - b;
        Poly3 p = Poly3::monomial({a, b, c}, RationalC(1));
        Poly3 back;
        for (auto& [j, y] : harmonic_decompose(p)) {
          REQUIRE(y.laplacian().is_zero());
          REQUIRE(y.degree() == deg - 2 * j);
          Poly3 rhoj = Poly3::one();
          for (int t = 0; t < j; ++t) rhoj = rhoj * Poly3::radius_sq();
          back = back + rhoj * y;
        }
        REQUIRE(back == p);
      }
    }
  }
}

TEST_CASE("sphere inner product: exact moments vs quadrature oracle") {
  REQUIRE(sphere_inner(Poly3::one(), Poly3::one()) == RationalC(1));
  REQUIRE(sphere_inner(Poly3::variable(2), Poly3::variable(2)) == RationalC(Rational(1, 3)));
  REQUIRE(sphere_inner(Poly3::variable(0), Poly3::variable(1)).is_zero());
  // different degrees pair to zero by convention
  REQUIRE(sphere_inner(Poly3::one(), Poly3::variable(2)).is_zero());

  for (auto [a, b, c] : {std::array{2, 2, 0}, std::array{4, 0, 0}, std::array{2, 2, 2}, std::array{0, 2, 4}}) {
    Poly3 pa = Poly3::monomial({a / 2, b / 2, c / 2}, RationalC(1));
    Poly3 pb = Poly3::monomial({a - a / 2, b - b / 2, c - c / 2}, RationalC(1));
    const double exact = static_cast<double>(to_real(sphere_inner(pa, pb).re));
    const double quad = sphere_moment_quadrature(a, b, c);
    REQUIRE(std::abs(exact - quad) < 1e-12);
  }
}

TEST_CASE("conjugation pairs with complex coefficients") {
  Poly3 p = Poly3::variable(0) * RationalC(Rational(0), Rational(1));  // i p1
  REQUIRE(sphere_inner(p, p) == RationalC(Rational(1, 3)));
  REQUIRE(p.conjugate() == Poly3::variable(0) * RationalC(Rational(0), Rational(-1)));
}

TEST_CASE("canonical text form") {
  Poly3 p = Poly3::monomial({2, 0, 1}, RationalC(Rational(1, 3))) + Poly3::variable(1) * RationalC(-2);
  REQUIRE(p.str() == "1/3 * p1^2 p3 + -2 * p2");
  REQUIRE(Poly3().str() == "0");
}
