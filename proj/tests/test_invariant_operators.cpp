#include <numbers>
#include <random>

#include "doctest.h"
#include "heckelab/errors.hpp"
#include "heckelab/invariant_operators.hpp"

using namespace heckelab;

namespace {

constexpr double kTol = 1e-9;

double max_diff(const Eigen::MatrixXcd& A, const Eigen::MatrixXd& B) {
  REQUIRE(A.rows() == B.rows());
  REQUIRE(A.cols() == B.cols());
  return (A - B.cast<std::complex<double>>()).cwiseAbs().maxCoeff();
}

std::vector<RepSpec> oracle_specs(std::int64_t q) {
  std::vector<RepSpec> out;
  const std::complex<double> chis[] = {1.0, -1.0, std::polar(1.0, 0.7)};
  for (int v = 1; v <= 4; ++v)
    for (int c = 0; c <= v; ++c)
      for (auto chi : chis) out.push_back(RepSpec::split(q, v, c, chi, 1 + v % (q - 1)));
  for (int v = 0; v <= 5; ++v)
    for (int sign : {1, -1}) out.push_back(RepSpec::nonsplit(q, v, 0, sign));
  for (int depth = 0; depth <= 4; ++depth) out.push_back(RepSpec::nilpotent(q, depth));
  return out;
}

}  // namespace

TEST_CASE("dimension formulas") {
  CHECK(dimension(RepSpec::split(3, 3, 1)) == 3);
  CHECK(dimension(RepSpec::nonsplit(3, 5, 0)) == 3);
  CHECK(dimension(RepSpec::nilpotent_trivial(3)) == kInfiniteDimension);
  CHECK(dimension(RepSpec::nilpotent(3, 2)) == 3);
  CHECK(dimension(RepSpec::split(3, 1, 2)) == 0);
  CHECK(dimension(RepSpec::nonsplit(5, 3, 2)) == 0);
  CHECK(dimension(RepSpec::special(5, 2, 1.0)) == 1);
}

TEST_CASE("closed-form matrices") {
  const double s3 = std::sqrt(3.0);
  SUBCASE("split, positive conductor") {
    auto A = build_matrix(RepSpec::split(3, 4, 1));
    REQUIRE(A.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(A.diag[i] == 0.0);
    for (int i = 0; i < 3; ++i) CHECK(A.off(i) == doctest::Approx(s3));
  }
  SUBCASE("split, conductor 0") {
    auto A = build_matrix(RepSpec::split(3, 3, 0, 1.0));
    CHECK(A.diag[0] == 2.0);
    CHECK(A.off(0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(A.off(1) == doctest::Approx(s3));
    CHECK(A.integer_diag() == std::vector<std::int64_t>{2, 0, 0, 0});
    CHECK_THROWS_AS(build_matrix(RepSpec::split(3, 3, 0, std::polar(1.0, 1.0))).integer_diag(), NonIntegerSpec);
  }
  SUBCASE("nonsplit corners") {
    auto odd = build_matrix(RepSpec::nonsplit(5, 5, 0, -1));
    CHECK(odd.size() == 3);
    CHECK(odd.diag.back() == -1.0);
    CHECK(odd.corner_at_end);
    auto even = build_matrix(RepSpec::nonsplit(5, 6, 0));
    CHECK(even.size() == 4);
    CHECK(even.off(2) == doctest::Approx(std::sqrt(6.0)));
    CHECK(even.off(1) == doctest::Approx(std::sqrt(5.0)));
    auto pure = build_matrix(RepSpec::nonsplit(5, 6, 1));
    CHECK(pure.size() == 3);
    CHECK(pure.off(1) == doctest::Approx(std::sqrt(5.0)));
  }
  SUBCASE("nilpotent truncation") {
    auto A = build_matrix(RepSpec::nilpotent_trivial(3), 7);
    CHECK(A.size() == 7);
    CHECK_THROWS_AS(build_matrix(RepSpec::nilpotent_trivial(3)), ZeroSpace);
  }
  CHECK_THROWS_AS(build_matrix(RepSpec::split(3, 1, 2)), ZeroSpace);
}

TEST_CASE("integer-similar form has the same spectrum") {
  for (const auto& spec : {RepSpec::split(5, 4, 0, -1.0), RepSpec::nonsplit(3, 7, 0, -1), RepSpec::nonsplit(3, 6, 0)}) {
    auto A = build_matrix(spec);
    Eigen::VectorXd sym = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A.dense()).eigenvalues();
    Eigen::VectorXcd gen = Eigen::EigenSolver<Eigen::MatrixXd>(A.integer_similar()).eigenvalues();
    std::vector<double> g;
    for (auto z : gen) {
      CHECK(std::abs(z.imag()) < 1e-9);
      g.push_back(z.real());
    }
    std::sort(g.begin(), g.end());
    for (int i = 0; i < A.size(); ++i) CHECK(g[i] == doctest::Approx(sym(i)).epsilon(1e-9));
  }
}

TEST_CASE("special representation scalar") {
  const auto chi = std::polar(1.0, 0.3);
  CHECK(std::abs(special_rep_scalar(5, 0, 2, chi) - (chi + 1.0 / chi)) < kTol);
  for (int x = 0; x < 3; ++x)
    CHECK(std::abs(special_rep_scalar(3, x, 1, 1.0) - (std::polar(1.0, 2 * std::numbers::pi * 2 * x / 3) + 1.0)) < kTol);
}

TEST_CASE("oracle reproduces the closed forms") {
  for (std::int64_t q : {3, 5}) {
    for (const auto& spec : oracle_specs(q)) {
      INFO(spec.to_string());
      ActionOracle oracle(spec);
      CHECK(oracle.size() == dimension(spec));
      if (oracle.size() == 0) continue;
      const Eigen::MatrixXd A = build_matrix(spec).dense();
      const Eigen::MatrixXcd M0 = oracle.matrix(0);
      CHECK(max_diff(M0, A) < kTol);
      CHECK((M0 - M0.adjoint()).cwiseAbs().maxCoeff() < kTol);
      for (std::int64_t x = 1; x < q; ++x) CHECK((oracle.matrix(x) - M0).cwiseAbs().maxCoeff() < kTol);
    }
  }
}

TEST_CASE("oracle examples") {
  SUBCASE("split q=3, v_c=2, conductor 1") {
    auto spec = RepSpec::split(3, 2, 1, std::polar(1.0, 1.1));
    CHECK(max_diff(action_oracle(spec, 1), build_matrix(spec).dense()) < kTol);
  }
  SUBCASE("nilpotent q=3, depth 3") {
    auto spec = RepSpec::nilpotent(3, 3);
    auto M = action_oracle(spec, 2);
    REQUIRE(M.rows() == 4);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(M(i, i + 1) - std::sqrt(3.0)) < kTol);
      CHECK(std::abs(M(i + 1, i) - std::sqrt(3.0)) < kTol);
    }
  }
  SUBCASE("nilpotent psi = 1, truncated") {
    auto spec = RepSpec::nilpotent_trivial(5);
    CHECK(max_diff(action_oracle(spec, 3, 6), build_matrix(spec, 6).dense()) < kTol);
  }
  CHECK_THROWS_AS(ActionOracle(RepSpec::nonsplit(3, 4, 1)), UnsupportedCharacter);
}

TEST_CASE("special representation against the oracle") {
  for (std::int64_t p : {3, 5, 7})
    for (std::int64_t c = 1; c < p; ++c)
      for (auto chi : {std::complex<double>(1.0), std::complex<double>(-1.0), std::polar(1.0, 2.0)}) {
        ActionOracle oracle(RepSpec::special(p, c, chi));
        REQUIRE(oracle.size() == 1);
        for (std::int64_t x = 0; x < p; ++x) {
          INFO("p=", p, " c=", c, " x=", x);
          const auto s = oracle.matrix(x)(0, 0);
          CHECK(std::abs(s - special_rep_action(p, x, c, chi)) < kTol);
          CHECK(std::abs(s.imag()) < kTol);
        }
        // the psi0(2 c x / p) chi + chi^{-1} form is not real, so cannot be the
        // eigenvalue of a self-adjoint operator
        double gap = 0;
        for (std::int64_t x = 0; x < p; ++x) gap = std::max(gap, std::abs(oracle.matrix(x)(0, 0) - special_rep_scalar(p, x, c, chi)));
        CHECK(gap > 0.1);
      }
}

TEST_CASE("g_x^{-1} is w g_x w, so T_x is self-adjoint") {
  LocalField f(5, 8);
  const ProjMatrix w = mat::w_eps(f);
  for (std::int64_t x = 0; x < 5; ++x) CHECK(proj_equal(w * mat::g_x(f, x) * w, mat::g_x(f, x).inverse()));
}

TEST_CASE("oracle respects the convolution product") {
  const std::vector<RepSpec> specs = {RepSpec::special(3, 1, std::polar(1.0, 0.7)), RepSpec::split(3, 2, 0, std::polar(1.0, 0.7)),
                                      RepSpec::nonsplit(3, 3, 0, -1), RepSpec::nilpotent(3, 2), RepSpec::split(3, 2, 1, -1.0)};
  for (const auto& spec : specs) {
    INFO(spec.to_string());
    ActionOracle o(spec);
    CosetCatalog catalog(o.field());
    for (std::int64_t x = 0; x < 3; ++x)
      for (std::int64_t y = 0; y < 3; ++y) {
        const Eigen::MatrixXcd lhs = o.matrix(x) * o.matrix(y);
        const Eigen::MatrixXcd rhs = o.hecke_matrix(catalog, convolve_T(catalog, x, y));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < kTol);
      }
  }
}

TEST_CASE("single-summand formulas") {
  SUBCASE("split") {
    const std::int64_t q = 5, c = 3;
    const auto chi = std::polar(1.0, 0.4);
    const auto spec = RepSpec::split(q, 3, 0, chi, c);
    ActionOracle o(spec);
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s)
        for (std::int64_t x : {0, 2})
          for (std::int64_t y0 = 0; y0 < q; ++y0)
            for (std::int64_t y1 : {0, 3}) {
              const auto lhs = o.u_summand(s, r, x, y0, y1);
              const bool case2 = r == 0 && (y0 + 1) % q == 0;
              const int target = case2 ? 0 : r + 1;
              // v(c) = 3, so the psi0 factor is trivial
              const auto rhs = target == s ? chi * o.normalization(s) : 0.0;
              INFO("r=", r, " s=", s, " x=", x, " y=", y0, "+e", y1);
              CHECK(std::abs(lhs - rhs) < kTol);
            }
    for (int r = 1; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s)
        for (std::int64_t z = 0; z < q; ++z) {
          const auto rhs = s == r - 1 ? o.normalization(s) / chi : 0.0;
          CHECK(std::abs(o.w_summand(s, r, 1, z) - rhs) < kTol);
        }
  }
  SUBCASE("nonsplit") {
    const std::int64_t q = 3;
    ActionOracle o(RepSpec::nonsplit(q, 6, 0));
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 3; ++s)
        for (std::int64_t y0 = 0; y0 < q; ++y0)
          for (std::int64_t y1 = 0; y1 < q; ++y1) {
            const int target = y0 % q != 0 ? r - 1 : r + 1;
            const auto rhs = target == s ? o.normalization(s) : 0.0;
            CHECK(std::abs(o.u_summand(s, r, 1, y0, y1) - rhs) < kTol);
            CHECK(std::abs(o.w_summand(s, r, 2, y1) - (s == r - 1 ? o.normalization(s) : 0.0)) < kTol);
          }
  }
  SUBCASE("nilpotent") {
    const std::int64_t q = 3;
    ActionOracle o(RepSpec::nilpotent(q, 3));
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s)
        for (std::int64_t y0 = 0; y0 < q; ++y0) {
          CHECK(std::abs(o.u_summand(s, r, 1, y0, 2) - (s == r - 1 ? o.normalization(s) : 0.0)) < kTol);
          CHECK(std::abs(o.w_summand(s, r, 2, y0) - (s == r + 1 ? o.normalization(s) : 0.0)) < kTol);
        }
  }
}

TEST_CASE("w t_{d^-1} squares to the identity") {
  LocalField f(5, 10);
  for (int v = 0; v <= 5; ++v) {
    auto fiber = FiberData::nonsplit(f, v);
    GMatrix g = mat::w(f) * mat::t(fiber.param.inverse());
    CHECK(proj_equal(g * g, mat::identity(f)));
    CHECK(fiber.in_centralizer(g));
  }
}

TEST_CASE("consistency with representations") {
  const std::int64_t p = 3;
  const auto tx = TPolynomial::t(p, 1), ty = TPolynomial::t(p, 2);
  const std::vector<RepSpec> nonspecial = {RepSpec::split(p, 2, 0, -1.0), RepSpec::split(p, 3, 1, std::polar(1.0, 0.5)),
                                           RepSpec::nonsplit(p, 3, 0, -1), RepSpec::nonsplit(p, 4, 0),
                                           RepSpec::nilpotent(p, 2), RepSpec::nilpotent_trivial(p), RepSpec::nonsplit(p, 5, 1)};
  for (const auto& spec : nonspecial) {
    INFO(spec.to_string());
    CHECK(consistency_with_representations(tx - ty, spec));
    CHECK(consistency_with_representations(TPolynomial(p), spec));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    auto P = TPolynomial::random(p, 4, 3, rng);
    for (const auto& spec : nonspecial) CHECK(consistency_with_representations(P, spec));
    for (std::int64_t c = 1; c < p; ++c) CHECK(consistency_with_representations(P, RepSpec::special(p, c, std::polar(1.0, 0.9))));
  }
  CHECK(consistency_with_representations(tx - TPolynomial::t(p, 0), RepSpec::special(p, 1, 1.0)));
  CHECK(consistency_with_representations(tx * ty - TPolynomial::t(p, 0), RepSpec::special(p, 2, -1.0)));
  CHECK_THROWS_AS(consistency_with_representations(tx, RepSpec::split(5, 1, 0)), SpecMismatch);
  CHECK_THROWS_AS(consistency_with_representations(tx, RepSpec::split(3, 1, 2)), SpecMismatch);
}
