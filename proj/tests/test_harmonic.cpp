#include <catch_amalgamated.hpp>

#include "cdw/harmonic.hpp"

using namespace cdw;

TEST_CASE("harmonic bases are harmonic, homogeneous, complete") {
  for (int l = 0; l <= 8; ++l) {
    const AngularBasis& b = harmonic_basis(l);
    REQUIRE(b.dim() == 2 * l + 1);
    for (const Poly3& y : b.elements()) {
      REQUIRE(y.degree() == l);
      REQUIRE(y.homogeneous());
      REQUIRE(y.laplacian().is_zero());
    }
    // Gram symmetric with positive diagonal
    for (int i = 0; i < b.dim(); ++i) {
      REQUIRE(b.gram()[i][i] > 0);
      for (int j = 0; j < b.dim(); ++j) REQUIRE(b.gram()[i][j] == b.gram()[j][i]);
    }
  }
}

TEST_CASE("l=0 and l=1 bases match the closed forms") {
  REQUIRE(harmonic_basis(0).elements()[0] == Poly3::one());
  const AngularBasis& b1 = harmonic_basis(1);
  // span{p3, p1, p2} with Gram (1/3) * identity in units of 4pi
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      REQUIRE(b1.gram()[i][j] == (i == j ? Rational(1, 3) : Rational(0)));
}

TEST_CASE("expand solves exactly against the Gram") {
  const AngularBasis& b = harmonic_basis(2);
  Poly3 y = Poly3::variable(0) * Poly3::variable(1) * RationalC(Rational(3, 7)) -
            (Poly3::monomial({0, 0, 2}, RationalC(1)) - Poly3::radius_sq() * RationalC(Rational(1, 3))) *
                RationalC(Rational(0), Rational(2));
  auto coeff = b.expand(y);
  Poly3 back;
  for (int i = 0; i < b.dim(); ++i) back = back + b.elements()[i] * coeff[i];
  REQUIRE(back == y);
}

TEST_CASE("multiply_pk splits p_k Y into harmonic parts") {
  // Y = 1: p3 * 1 has no lower part
  auto s0 = multiply_pk(Poly3::one(), 2);
  REQUIRE(s0.upper == Poly3::variable(2));
  REQUIRE(s0.lower.is_zero());

  // Y = p3, k = 3: upper = p3^2 - |p|^2/3, lower = 1 with coefficient 1/3
  auto s1 = multiply_pk(Poly3::variable(2), 2);
  REQUIRE(s1.upper == Poly3::monomial({0, 0, 2}, RationalC(1)) - Poly3::radius_sq() * RationalC(Rational(1, 3)));
  REQUIRE(s1.lower == Poly3::one());
  REQUIRE(s1.lower_coeff == Rational(1, 3));

  // Y = p1, k = 2: lower vanishes
  auto s2 = multiply_pk(Poly3::variable(0), 1);
  REQUIRE(s2.upper == Poly3::variable(0) * Poly3::variable(1));
  REQUIRE(s2.lower.is_zero());

  REQUIRE_THROWS(multiply_pk(Poly3::monomial({2, 0, 0}, RationalC(1)), 0));
}

TEST_CASE("split reproduces p_k Y exactly for all bases up to l=8") {
  for (int l = 0; l <= 8; ++l) {
    for (const Poly3& y : harmonic_basis(l).elements()) {
      for (int k = 0; k < 3; ++k) {
        auto s = multiply_pk(y, k);
        REQUIRE(s.upper.laplacian().is_zero());
        Poly3 recon = s.upper + Poly3::radius_sq() * s.lower * RationalC(s.lower_coeff);
        REQUIRE(recon == Poly3::variable(k) * y);
        // agreement with harmonic_decompose
        auto dec = harmonic_decompose(Poly3::variable(k) * y);
        REQUIRE(harmonic_part(Poly3::variable(k) * y, l + 1) == s.upper);
      }
    }
  }
}

TEST_CASE("rotation action") {
  // (p1 d2 - p2 d1) p2 = p1
  REQUIRE(rotation_action(Poly3::variable(1), 0, 1) == Poly3::variable(0));
  REQUIRE(rotation_action(Poly3::one(), 0, 1).is_zero());
  // (p1 d2 - p2 d1)(p1 p2) = p1^2 - p2^2
  REQUIRE(rotation_action(Poly3::variable(0) * Poly3::variable(1), 0, 1) ==
          Poly3::monomial({2, 0, 0}, RationalC(1)) - Poly3::monomial({0, 2, 0}, RationalC(1)));
  // preserves harmonicity and degree
  for (const Poly3& y : harmonic_basis(3).elements()) {
    Poly3 r = rotation_action(y, 1, 2);
    REQUIRE((r.is_zero() || r.degree() == 3));
    REQUIRE(r.laplacian().is_zero());
  }
}

TEST_CASE("rotation generators close the so(3) bracket on polynomials") {
  // L_kl := p_k d_l - p_l d_k satisfies [L_ij, L_kl] Y = delta_jk L_il Y - ...
  auto act = [](int k, int l, const Poly3& y) { return rotation_action(y, k, l); };
  for (int deg = 0; deg <= 8; ++deg) {
    for (const Poly3& y : harmonic_basis(deg).elements()) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
              if (i == j || k == l) continue;
              Poly3 lhs = act(i, j, act(k, l, y)) - act(k, l, act(i, j, y));
              auto d = [](int a, int b) { return a == b ? 1 : 0; };
              Poly3 rhs = act(i, l, y) * RationalC(d(j, k)) - act(i, k, y) * RationalC(d(j, l)) -
                          act(j, l, y) * RationalC(d(i, k)) + act(j, k, y) * RationalC(d(i, l));
              REQUIRE(lhs == rhs);
            }
    }
  }
}

TEST_CASE("traceless tensor families") {
  TracelessTensorFamily f0(0);
  REQUIRE(f0.component({}) == Poly3::one());
  TracelessTensorFamily f1(1);
  for (int j = 0; j < 3; ++j) REQUIRE(f1.component({j}) == Poly3::variable(j));
  TracelessTensorFamily f2(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly3 expect = Poly3::variable(i) * Poly3::variable(j);
      if (i == j) expect = expect - Poly3::radius_sq() * RationalC(Rational(1, 3));
      REQUIRE(f2.component({i, j}) == expect);
    }
  for (int h = 0; h <= 4; ++h) {
    TracelessTensorFamily f(h);
    REQUIRE(f.traceless());
    std::vector<int> idx(h, 1);
    REQUIRE(f.component(idx).laplacian().is_zero());
    REQUIRE((h == 0 || f.component(idx).degree() == h));
  }
}

TEST_CASE("curl identity holds exactly for h <= 4") {
  for (int h = 1; h <= 4; ++h) REQUIRE(curl_identity_check(h));
  REQUIRE_THROWS(curl_identity_check(0));
}

TEST_CASE("epsilon identity holds exactly for l <= 6") {
  for (int l = 0; l <= 6; ++l) REQUIRE(epsilon_identity_check(l));
}
