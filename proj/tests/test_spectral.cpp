#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "doctest.h"
#include "heckelab/errors.hpp"
#include "heckelab/spectral.hpp"

using namespace heckelab;

namespace {

double pure_eigenvalue(double a, int n, int k) { return 2 * a * std::cos(k * std::numbers::pi / (n + 1)); }

}  // namespace

TEST_CASE("closed forms") {
  auto half = eigenvalues_tridiagonal(Tridiagonal::lemma_shape(5, 0.5, 0.5, 0.0));
  for (int k = 1; k <= 5; ++k) CHECK(half.eigenvalues[5 - k] == doctest::Approx(std::cos(k * std::numbers::pi / 6)).epsilon(1e-12));

  auto one = eigenvalues_tridiagonal(build_matrix(RepSpec::special(3, 1, 1.0)));
  REQUIRE(one.eigenvalues.size() == 1);
  CHECK(one.eigenvalues[0] == doctest::Approx(2.0));
  CHECK(verify_bound_and_simplicity(one));

  auto two = eigenvalues_tridiagonal(build_matrix(RepSpec::nilpotent(3, 1)));
  CHECK(two.eigenvalues[0] == doctest::Approx(-std::sqrt(3.0)));
  CHECK(two.eigenvalues[1] == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("pure family against 2 sqrt q cos(k pi / (n+1))") {
  for (std::int64_t q : {2, 3, 7})
    for (int n : {1, 2, 7, 64, 500}) {
      auto r = eigenvalues_tridiagonal(build_matrix(RepSpec::nilpotent(q, n - 1)));
      REQUIRE(static_cast<int>(r.eigenvalues.size()) == n);
      CHECK(r.sturm_count == n);
      double worst = 0;
      for (int k = 1; k <= n; ++k)
        worst = std::max(worst, std::abs(r.eigenvalues[static_cast<std::size_t>(n - k)] - pure_eigenvalue(std::sqrt(double(q)), n, k)));
      INFO("q=", q, " n=", n);
      CHECK(worst < 1e-10);
    }
}

TEST_CASE("solver agrees with a dense eigensolver") {
  for (const auto& fam : families(5, 37, true)) {
    INFO(fam.name);
    const auto A = build_matrix(fam.spec);
    auto r = eigenvalues_tridiagonal(A);
    Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A.dense()).eigenvalues();
    for (int i = 0; i < A.size(); ++i) CHECK(std::abs(r.eigenvalues[static_cast<std::size_t>(i)] - ref(i)) < 1e-10);
  }
}

TEST_CASE("lemma hypotheses") {
  CHECK(check_lemma_hypotheses(std::sqrt(3.0), std::sqrt(3.0), 0).holds());
  auto split3 = check_lemma_hypotheses(std::sqrt(3.0), std::sqrt(2.0), 2);
  CHECK(split3.sum_bound);
  CHECK(split3.edge_bound);
  auto split2 = check_lemma_hypotheses(std::sqrt(2.0), 1, 2);
  CHECK_FALSE(split2.sum_bound);
  CHECK(split2.edge_bound);
  CHECK(check_lemma_hypotheses(1, std::sqrt(2.0), 0).holds());
  CHECK_FALSE(check_lemma_hypotheses(1, 1.5, 0.1).edge_bound);

  for (std::int64_t q : {3, 4, 5, 7, 9})
    for (int n : {1, 2, 3, 8})
      for (const auto& fam : families(q, n, true)) {
        INFO(fam.name, " q=", q, " n=", n);
        CHECK(check_lemma_hypotheses(build_matrix(fam.spec)).holds());
      }
  CHECK_FALSE(check_lemma_hypotheses(build_matrix(RepSpec::split(2, 5, 0, 1.0))).sum_bound);
}

TEST_CASE("bound and simplicity on every family") {
  for (std::int64_t q : {3, 5, 7})
    for (int n : {1, 2, 3, 10, 51, 200})
      for (const auto& fam : families(q, n, true)) {
        auto r = eigenvalues_tridiagonal(build_matrix(fam.spec));
        INFO(fam.name, " q=", q, " n=", n, " margin=", r.bound_margin, " gap=", r.min_gap);
        CHECK(r.hypothesis_flags.holds());
        CHECK(verify_bound_and_simplicity(r));
      }
}

TEST_CASE("arcsine limit") {
  const auto ks = [](const RepSpec& s) { return arcsine_ks_distance(eigenvalues_tridiagonal(build_matrix(s))); };
  CHECK(ks(RepSpec::nilpotent(3, 9)) < 0.2);
  double prev = 1;
  for (int n : {50, 200, 1000, 2000}) {
    const double d = ks(RepSpec::nilpotent(3, n - 1));
    CHECK(d <= prev * 1.1);
    prev = d;
  }
  CHECK(prev < 0.02);
  CHECK(ks(RepSpec::split(3, 1999, 0, 1.0)) < 0.02);
  CHECK(ks(RepSpec::nonsplit(5, 3999, 0, -1)) < 0.02);
  CHECK(arcsine_cdf(0) == doctest::Approx(0.5));
  CHECK(arcsine_cdf(1) == 1.0);
}

TEST_CASE("chebyshev eigenvectors") {
  auto a = chebyshev_eigenvector(1, 1);
  CHECK(a.lambda == doctest::Approx(0).epsilon(1e-15));
  CHECK(a.norm_sq == doctest::Approx(1.0));
  auto b = chebyshev_eigenvector(3, 2);
  CHECK(std::abs(b.v[0] - 1) < 1e-12);
  CHECK(std::abs(b.v[1]) < 1e-12);
  CHECK(std::abs(b.v[2] + 1) < 1e-12);
  CHECK(b.norm_sq == doctest::Approx(2.0));

  for (int n : {1, 2, 5, 40, 500})
    for (int k = 1; k <= n; k += std::max(1, n / 7)) {
      auto c = chebyshev_eigenvector(n, k);
      double res = 0, vn = 0;
      for (int j = 0; j < n; ++j) {
        const double left = j > 0 ? c.v[static_cast<std::size_t>(j - 1)] : 0.0;
        const double right = j + 1 < n ? c.v[static_cast<std::size_t>(j + 1)] : 0.0;
        const double e = 0.5 * (left + right) - c.lambda * c.v[static_cast<std::size_t>(j)];
        res += e * e;
        vn += c.v[static_cast<std::size_t>(j)] * c.v[static_cast<std::size_t>(j)];
      }
      INFO("n=", n, " k=", k);
      CHECK(std::sqrt(res) < 1e-10 * std::sqrt(vn));
      CHECK(std::abs(c.norm_sq - c.closed_form_norm_sq) < 1e-10 * c.closed_form_norm_sq);
    }

  for (int k = 0; k < 30; ++k)
    for (double x = 0.05; x < 3.1; x += 0.1) CHECK(std::abs(chebyshev_u(k, std::cos(x)) * std::sin(x) - std::sin((k + 1) * x)) < 1e-12);
}

TEST_CASE("non-symmetric input") {
  CHECK_THROWS_AS(eigenvalues_tridiagonal({0, 0}, {1}, {2}, 2), NonSymmetric);
  auto r = eigenvalues_tridiagonal({0, 0}, {1}, {1}, 2);
  CHECK(r.eigenvalues[1] == doctest::Approx(1.0));
}
