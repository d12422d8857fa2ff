#include <cmath>
#include <random>

#include "doctest.h"
#include "heckelab/measure.hpp"

using namespace heckelab;

TEST_CASE("truncated measure") {
  auto one = truncated_measure(1, 2.0);
  REQUIRE(one.atoms.size() == 1);
  CHECK(std::abs(one.atoms[0].location) < 1e-15);
  CHECK(one.atoms[0].weight == doctest::Approx(1.0));

  const double a = std::sqrt(3.0);
  auto two = truncated_measure(2, a);
  CHECK(two.atoms[0].location == doctest::Approx(a));
  CHECK(two.atoms[1].location == doctest::Approx(-a));
  CHECK(two.atoms[0].weight == doctest::Approx(0.5));

  for (int n : {1, 2, 3, 10, 100, 1000, 10000}) CHECK(std::abs(truncated_measure(n, 1.0).total_weight() - 1) < 1e-10);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, 6);
  for (int n : {1, 2, 5, 17, 200})
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> f(static_cast<std::size_t>(deg(rng) + 1));
      for (auto& c : f) c = coef(rng);
      const double lhs = truncated_measure(n, a).integrate(f);
      const double rhs = direct_expectation(n, a, f);
      CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  CHECK(std::abs(truncated_measure(4096, a).max_location() - 2 * a) < 1e-3);
}

TEST_CASE("exact moments") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  CHECK(moment_exact(10, 5, 3) == 0);
  CHECK(moment_exact(100, 4, 7) == 2 * 49);
  CHECK(moment_exact(100, 6, 7) == 5 * 343);
  // cap active: n = 2 allows only 0 -> 1 -> 0 walks
  CHECK(moment_exact(2, 6, 3) == 27);
  for (std::int64_t q : {3, 5})
    for (int k = 0; k <= 20; k += 2) {
      const BigInt expect = catalan(k / 2) * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k / 2));
      CHECK(moment_exact(k / 2 + 1, k, q) == expect);
      CHECK(moment_exact(k + 7, k, q) == expect);
      CHECK(semicircle_moment(k) * Rational(BigInt(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k / 2)))) == Rational(expect));
    }
  const double a = std::sqrt(5.0);
  for (int n : {3, 8, 40})
    for (int k = 0; k <= 12; ++k) {
      const double exact = moment_exact(n, k, 5).convert_to<double>();
      CHECK(std::abs(truncated_measure(n, a).moment(k) - exact) < 1e-9 * std::max(1.0, exact));
    }
}

TEST_CASE("semicircle moments by quadrature") {
  for (double a : {1.0, std::sqrt(3.0)})
    for (int k = 0; k <= 12; ++k) CHECK(std::abs(semicircle_moment_quadrature(k, a) - semicircle_moment(k, a)) < 1e-9 * std::max(1.0, semicircle_moment(k, a)));
  CHECK(semicircle_moment(2, 2.0) == doctest::Approx(4.0));
}

TEST_CASE("weak convergence") {
  const std::vector<int> ns = {1, 2, 4, 16, 256, 4096};
  for (const auto& row : weak_convergence_report(ns, {1}, 3)) CHECK(row.error < 1e-12);
  for (const auto& row : weak_convergence_report(ns, {0, 0, 1}, 3))
    if (row.n >= 2) CHECK(row.error < 1e-9);
  const std::vector<double> x8 = {0, 0, 0, 0, 0, 0, 0, 0, 1};
  auto rows = weak_convergence_report(ns, x8, 3);
  CHECK(rows.back().error < 1e-3 * 14 * 81);
  CHECK(rows.back().error < 1e-9 * 14 * 81);
  CHECK(rows[0].error > rows[2].error);
}

TEST_CASE("e_0 is cyclic") {
  CHECK(bareiss_determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
  for (int n = 1; n <= 40; ++n) CHECK(krylov_determinant(n) != 0);
}
