#include <cmath>

#include "doctest.h"
#include "heckelab/errors.hpp"
#include "heckelab/spectral.hpp"
#include "heckelab/weil.hpp"

using namespace heckelab;

namespace {

IntPolynomial poly(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (auto a : c) v.emplace_back(a);
  return IntPolynomial(v);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto p = poly({-3, 0, 1});
  CHECK(p.to_string() == "x^2 - 3");
  CHECK(p.derivative() == poly({0, 2}));
  CHECK((p * poly({1, 1})).to_string() == "x^3 + x^2 - 3x - 3");
  CHECK(exact_quotient(p * poly({1, 1}), poly({1, 1})) == p);
  CHECK_THROWS(exact_quotient(p, poly({1, 1})));
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  const auto sq = IntPolynomial::from_roots({1, 1, 2, -3, -3, -3});
  CHECK(squarefree(sq) == IntPolynomial::from_roots({1, 2, -3}));
  CHECK(p.evaluate(Rational(1, 2)) == Rational(-11, 4));
  CHECK(p.sign_at(Rational(7, 4)) == 1);
  CHECK(p.sign_at(Rational(-17, 10)) == -1);
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(poly({-3, 0, 1}), -2, 2) == 2);
  CHECK(sturm_count_real(poly({1, 0, 1})) == 0);
  CHECK(sturm_count(poly({1, 0, 1}), -100, 100) == 0);
  const auto p = IntPolynomial::from_roots({-2, 0, 0, 3, 5});
  CHECK(sturm_count_real(p) == 4);
  // half-open (a, b]
  CHECK(sturm_count(p, -2, 3) == 2);
  CHECK(sturm_count(p, Rational(-5, 2), 3) == 3);
  CHECK(sturm_count(p, 3, 5) == 1);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly_exact(build_matrix(RepSpec::nilpotent(7, 1))) == poly({-7, 0, 1}));
  CHECK(char_poly_exact(build_matrix(RepSpec::special(3, 1, 1.0))) == poly({-2, 1}));
  CHECK_THROWS_AS(char_poly_exact(build_matrix(RepSpec::split(3, 3, 0, std::polar(1.0, 0.5)))), NonIntegerSpec);

  for (std::int64_t q : {3, 5})
    for (const auto& fam : families(q, 50)) {
      INFO(fam.name, " q=", q);
      const auto A = build_matrix(fam.spec);
      const auto cp = char_poly_exact(A);
      CHECK(cp.degree() == 50);
      CHECK(sturm_count_real(cp) == 50);
      const auto roots = real_roots(cp);
      const auto ev = eigenvalues_tridiagonal(A).eigenvalues;
      REQUIRE(roots.size() == ev.size());
      for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(roots[i] - ev[i]) < 1e-8);
      const auto r = even_odd_resultant(cp);
      double scale = 0;
      for (const auto& c : r.coeffs()) scale = std::max(scale, std::abs(c.convert_to<double>()));
      for (double l : ev) CHECK(std::abs(r.evaluate(l * l)) < 1e-6 * scale * std::pow(std::max(1.0, l * l), r.degree()));
    }
}

TEST_CASE("certify_weil examples") {
  CHECK(certify_weil(poly({-2, 1}), 3).pass());
  CHECK(certify_weil(poly({-3, 0, 1}), 3).pass());
  CHECK(certify_weil(poly({-12, 1}), 36).pass());  // endpoint y = 4q
  CHECK(certify_weil(poly({0, 1}), 3).pass());     // endpoint y = 0
  auto bad = certify_weil(poly({-3, 1}), 1);
  CHECK(bad.totally_real);
  CHECK_FALSE(bad.bounded);
  CHECK_FALSE(certify_weil(poly({3, 0, 1}), 5).pass());  // x^2 + 3 is not totally real
  CHECK_FALSE(certify_weil(IntPolynomial::from_roots({1, 4}), 3).pass());
  CHECK(certify_weil(IntPolynomial::from_roots({1, 1, -3}), 3).pass());
  CHECK_THROWS_AS(certify_weil(poly({1, 2}), 3), NotMonic);
}

TEST_CASE("every integer family certifies") {
  for (std::int64_t q : {2, 3, 4, 5, 9})
    for (int n : {1, 2, 3, 4, 7, 12, 25, 50})
      for (const auto& fam : families(q, n)) {
        INFO(fam.name, " q=", q, " n=", n);
        CHECK(certify_weil(char_poly_exact(build_matrix(fam.spec)), q).pass());
      }
}
