#include <random>

#include "doctest.h"
#include "heckelab/errors.hpp"
#include "heckelab/proj_group.hpp"

using namespace heckelab;

namespace {

LocalElement L(const LocalField& f, std::int64_t n, std::int64_t d = 1) { return LocalElement::from_rational(f, n, d); }

}  // namespace

TEST_CASE("basic identities") {
  LocalField f(3);
  CHECK(proj_equal(mat::w(f) * mat::w(f), mat::identity(f)));
  auto th = mat::u(L(f, 4)).theta();
  CHECK(th(0, 1).is_zero());
  CHECK(th(1, 0).equals(L(f, 4)));
  auto a = mat::from_ints(f, 1, 2, 3, 7), b = mat::from_ints(f, 3, 9, 1, 1);
  CHECK(proj_equal((a * b).theta(), b.theta() * a.theta()));
  CHECK(proj_equal(a.scaled(L(f, 6)), a));
  CHECK_FALSE(proj_equal(a, b));
}

TEST_CASE("g_x w g_y = g_{x,y} w") {
  LocalField f(5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      auto lhs = mat::g_x(f, x) * mat::w_eps(f) * mat::g_x(f, y);
      CHECK(proj_equal(lhs, mat::g_xy(f, x, y) * mat::w_eps(f)));
      // g_x w u_eps g_y = u_x h_{x,y} theta(u_y)
      auto ueps = mat::u(DualElement::from_int(f, 0, 1));
      auto lhs2 = mat::g_x(f, x) * mat::w_eps(f) * ueps * mat::g_x(f, y);
      auto ux = mat::u(DualElement::from_int(f, x)), uy = mat::u(DualElement::from_int(f, y));
      CHECK(proj_equal(lhs2, ux * mat::h_xy(f, x, y) * uy.theta()));
    }
}

TEST_CASE("semidirect decomposition") {
  LocalField f(3);
  auto g = mat::from_ints(f, 2, 1, 5, 3);
  auto d = semidirect_decompose(mat::embed(g));
  CHECK(d.X.a.is_zero());
  CHECK(d.X.b.is_zero());
  CHECK(d.X.c.is_zero());

  auto X = LieElement{L(f, 2, 3), L(f, 1), L(f, 7, 9)};
  auto back = semidirect_decompose(recompose(X, g));
  CHECK(back.X.equals(X));
  CHECK(proj_equal(back.h, g));

  // g_x -> (diag(x/2p, -x/2p), t_p)
  for (int x = 0; x < 3; ++x) {
    auto dx = semidirect_decompose(mat::g_x(f, x));
    CHECK(dx.X.a.equals(L(f, x, 6)));
    CHECK(dx.X.b.is_zero());
    CHECK(dx.X.c.is_zero());
    CHECK(proj_equal(dx.h, mat::t(L(f, 3))));
  }
}

TEST_CASE("K and K_eps membership") {
  LocalField f(3);
  CHECK(in_K(mat::identity(f)));
  CHECK_FALSE(in_K(mat::t(L(f, 3))));
  CHECK(in_K(mat::from_ints(f, 3, 3, 3, 6)));  // 3 * [[1,1],[1,2]]
  CHECK(in_K_eps(mat::u(DualElement::from_int(f, 0, 1))));
  CHECK(in_K_eps(mat::u(DualElement(L(f, 2), L(f, 5)))));
  CHECK_FALSE(in_K_eps(mat::u(DualElement(L(f, 0), L(f, 1, 3)))));
  CHECK_FALSE(in_K_eps(mat::g_x(f, 1)));
  CHECK(in_K_eps(mat::g_xy(f, 2, 2)));
  CHECK_FALSE(in_K_eps(mat::g_xy(f, 1, 2)));
}

TEST_CASE("theta symmetry of the named elements") {
  LocalField f(5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      for (const auto& g : {mat::g_x(f, x), mat::g_x(f, x) * mat::g_x(f, y), mat::g_xy(f, x, y), mat::h_xy(f, x, y)}) {
        CHECK(proj_equal(g.theta(), g));
        CHECK(in_K_eps(g) == in_K_eps(g.theta()));
      }
    }
}

TEST_CASE("adjoint action") {
  LocalField f(3);
  auto m = LieElement{L(f, 9), L(f, 0), L(f, 0)};
  CHECK(apply_adjoint(mat::identity(f), m).equals(m));
  CHECK(apply_adjoint(mat::t(L(f, 3)), m).equals(m));
  auto n = LieElement{L(f, 0), L(f, 1), L(f, 0)};
  auto r = apply_adjoint(mat::u(L(f, 5, 3)), n);
  CHECK(r.equals(n));
  // g^{-1} m g for g = t_s scales b by 1/s
  auto r2 = apply_adjoint(mat::t(L(f, 3)), n);
  CHECK(r2.b.equals(L(f, 1, 3)));
}

TEST_CASE("equality mod scalars is compatible with products") {
  LocalField f(5);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-30, 30);
  auto rnd = [&] {
    for (;;) {
      auto g = mat::embed(mat::from_ints(f, e(rng), e(rng), e(rng), e(rng)));
      auto tg = mat::tangent(mat::embed(mat::from_ints(f, e(rng), e(rng), e(rng), e(rng))));
      ProjMatrix m{DualElement(g(0, 0).body(), tg(0, 0)), DualElement(g(0, 1).body(), tg(0, 1)),
                   DualElement(g(1, 0).body(), tg(1, 0)), DualElement(g(1, 1).body(), tg(1, 1))};
      if (!mat::body(m).det().is_zero()) return m;
    }
  };
  for (int i = 0; i < 50; ++i) {
    auto a = rnd(), b = rnd();
    auto s = DualElement(L(f, 10), L(f, 3));
    CHECK(proj_equal(a.scaled(s) * b, a * b));
    CHECK(proj_equal(a * a.inverse(), mat::identity_eps(f)));
    auto d = semidirect_decompose(a);
    CHECK(proj_equal(recompose(d.X, d.h), a));
  }
}
