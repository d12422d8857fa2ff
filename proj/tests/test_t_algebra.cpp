#include <random>

#include "doctest.h"
#include "heckelab/errors.hpp"
#include "heckelab/t_algebra.hpp"

using namespace heckelab;

TEST_CASE("cyclotomic arithmetic") {
  for (std::int64_t p : {3, 5, 7}) {
    const Cyclotomic one(p, 1);
    Cyclotomic s(p);
    for (std::int64_t k = 0; k < p; ++k) s += Cyclotomic::zeta_power(p, k);
    CHECK(s.is_zero());
    CHECK(Cyclotomic::zeta_power(p, 1) * Cyclotomic::zeta_power(p, p - 1) == one);
    // N(1 - zeta) = p
    CHECK((one - Cyclotomic::zeta_power(p, 1)).norm() == Rational(p));
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int i = 0; i < 20; ++i) {
      Cyclotomic a(p);
      for (std::int64_t k = 0; k < p; ++k) a += Cyclotomic::zeta_power(p, k) * Rational(c(rng), 1 + (i % 3));
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == one);
      CHECK(std::abs((a * a).to_complex() - a.to_complex() * a.to_complex()) < 1e-9);
    }
  }
  CHECK_THROWS(Cyclotomic(3).inverse());
}

TEST_CASE("beta_1 substitution") {
  const std::int64_t p = 5;
  const Cyclotomic one(p, 1);
  CHECK(beta_1(TPolynomial::t(p, 2)) == LaurentPolynomial::monomial(p, 1, one));
  CHECK(beta_1(TPolynomial::t(p, 1) * TPolynomial::t(p, 3) - TPolynomial::t(p, 3) * TPolynomial::t(p, 1)).is_zero());
  CHECK(beta_1(TPolynomial::sum_t(p)) == LaurentPolynomial::monomial(p, 1, Cyclotomic(p, p)));
  CHECK(beta_1(kernel_element(p, 3)).is_zero());
}

TEST_CASE("beta_psi substitution") {
  const std::int64_t p = 5;
  const Cyclotomic one(p, 1);
  ResidueCharacter psi{p, 2};
  for (std::int64_t x = 0; x < p; ++x) {
    CHECK(beta_psi(TPolynomial::t(p, x), psi) ==
          LaurentPolynomial::monomial(p, -1, psi.value(x)) + LaurentPolynomial::monomial(p, 1, one));
    if (x == 0) continue;
    const auto img = beta_psi(kernel_element(p, x), psi);
    CHECK(img.is_constant());
    CHECK(img.coefficient(0) == Cyclotomic(p, p) * (one - psi.value(x)));
  }
  CHECK_THROWS_AS(beta_psi(TPolynomial::t(p, 0), ResidueCharacter{p, 0}), TrivialCharacter);
}

TEST_CASE("betas are ring morphisms") {
  for (std::int64_t p : {3, 5}) {
    std::mt19937_64 rng(11 + p);
    for (int i = 0; i < 25; ++i) {
      auto P = TPolynomial::random(p, 3, 4, rng);
      auto Q = TPolynomial::random(p, 3, 4, rng);
      CHECK(beta_1(P * Q) == beta_1(P) * beta_1(Q));
      CHECK(beta_1(P + Q) == beta_1(P) + beta_1(Q));
      for (std::int64_t u = 1; u < p; ++u) {
        ResidueCharacter psi{p, u};
        CHECK(beta_psi(P * Q, psi) == beta_psi(P, psi) * beta_psi(Q, psi));
        CHECK(beta_psi(P - Q, psi) == beta_psi(P, psi) - beta_psi(Q, psi));
      }
    }
  }
}

TEST_CASE("surjectivity witness") {
  for (std::int64_t p : {3, 5, 7})
    for (std::int64_t u = 1; u < p; ++u) {
      auto w = surjectivity_witness(ResidueCharacter{p, u});
      CHECK(w.verified);
      CHECK(w.x != 0);
    }
}

TEST_CASE("pairwise coprime kernels") {
  for (std::int64_t p : {3, 5, 7})
    for (std::int64_t u1 = 0; u1 < p; ++u1)
      for (std::int64_t u2 = 0; u2 < p; ++u2) {
        if (u1 == u2) continue;
        auto w = crt_witness(ResidueCharacter{p, u1}, ResidueCharacter{p, u2});
        INFO("p=", p, " u1=", u1, " u2=", u2);
        CHECK(w.ok());
      }
}

TEST_CASE("balanced substitution") {
  const std::int64_t p = 5;
  const Cyclotomic one(p, 1);
  for (std::int64_t u = 1; u < p; ++u) {
    ResidueCharacter psi{p, u}, bar{p, p - u};
    CHECK(beta_psi_balanced(TPolynomial::sum_t(p), psi).is_zero());
    CHECK(beta_psi_balanced(kernel_element(p, 2), psi).is_zero());
    std::mt19937_64 rng(u);
    for (int i = 0; i < 5; ++i) {
      auto P = TPolynomial::random(p, 3, 3, rng);
      const auto z = std::polar(1.0, 0.37 * i + 0.1);
      CHECK(std::abs(beta_psi_balanced(P, psi).evaluate(z) - beta_psi_balanced(P, bar).evaluate(1.0 / z)) < 1e-9);
    }
  }
  CHECK(beta_psi_balanced(TPolynomial::t(p, 1), ResidueCharacter{p, 1}) ==
        LaurentPolynomial::monomial(p, 1, Cyclotomic::zeta_power(p, 1)) + LaurentPolynomial::monomial(p, -1, Cyclotomic::zeta_power(p, 4)));
}
