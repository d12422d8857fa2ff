#include "doctest.h"
#include "heckelab/coset_engine.hpp"
#include "heckelab/errors.hpp"

using namespace heckelab;

TEST_CASE("rep family size and inequivalence") {
  for (std::int64_t p : {3, 5}) {
    LocalField f(p);
    for (std::int64_t x = 0; x < p; ++x) {
      auto fam = rep_family(f, x);
      CHECK(fam.reps.size() == static_cast<std::size_t>(p * p + p));
      CHECK(pairwise_inequivalent(fam, mat::g_x(f, x)));
    }
  }
  // the rep family is not a transversal for the conjugated subgroup
  LocalField f(3);
  CHECK_FALSE(pairwise_inequivalent(rep_family(f, 0), mat::g_x(f, 0).inverse()));
}

TEST_CASE("left coset counts of the named double cosets") {
  LocalField f(3);
  const std::int64_t q = 3;
  CosetCatalog cat(f);
  for (std::int64_t x = 0; x < q; ++x)
    for (std::int64_t y = x; y < q; ++y) {
      const auto& gg = cat.get(DoubleCosetName::make(CosetKind::GxGy, x, y));
      CHECK(gg.left_coset_count() == static_cast<std::size_t>(q * q * q * q + q * q * q));
      const auto& gxy = cat.get(DoubleCosetName::make(CosetKind::Gxy, x, y));
      CHECK(gxy.left_coset_count() == static_cast<std::size_t>(x == y ? 1 : q * q + q));
      CHECK(gxy.left_cosets_distinct());
      if (x == y) {
        const auto& h = cat.get(DoubleCosetName::make(CosetKind::Hxy, x, y));
        CHECK(h.left_coset_count() == static_cast<std::size_t>(q * q - 1));
        CHECK(h.left_cosets_distinct());
      }
    }
  CHECK(cat.get(DoubleCosetName::make(CosetKind::GxGy, 0, 1)).left_cosets_distinct());
}

TEST_CASE("named cosets: symmetry and the forced coincidence") {
  LocalField f(3);
  CosetCatalog cat(f);
  for (std::int64_t x = 0; x < 3; ++x)
    for (std::int64_t y = 0; y < 3; ++y) {
      auto name = DoubleCosetName::make(CosetKind::Gxy, x, y);
      const auto& c = cat.get(name);
      CHECK(c.contains(mat::g_xy(f, y, x)));
      CHECK(c.contains(mat::g_xy(f, x, y)));
      CHECK(c.contains(mat::h_xy(f, x, y)) == (x != y));
      CHECK(gxy_hxy_equal(3, x, y) == (x != y));
      const auto& gg = cat.get(DoubleCosetName::make(CosetKind::GxGy, x, y));
      CHECK_FALSE(gg.contains(mat::g_xy(f, x, y)));
      CHECK_FALSE(gg.contains(mat::h_xy(f, x, y)));
      CHECK(gg.contains(mat::g_x(f, y) * mat::g_x(f, x)));
      if (x == y) CHECK_FALSE(cat.get(DoubleCosetName::make(CosetKind::Hxy, x, x)).contains(mat::g_xy(f, x, x)));
    }
}

TEST_CASE("classification of the canonical probes") {
  LocalField f(3);
  CosetCatalog cat(f);
  auto ueps = mat::u(DualElement::from_int(f, 0, 1));
  CHECK(cat.classify_product_coset(1, 1, mat::identity_eps(f)).kind == CosetKind::GxGy);
  CHECK(cat.classify_product_coset(1, 1, mat::w_eps(f)).kind == CosetKind::Gxy);
  CHECK(cat.classify_product_coset(1, 1, mat::w_eps(f) * ueps).kind == CosetKind::Hxy);
  CHECK(cat.classify_product_coset(1, 2, mat::w_eps(f) * ueps).kind == CosetKind::Gxy);

  for (std::int64_t x = 0; x < 3; ++x)
    for (std::int64_t y = 0; y < 3; ++y)
      for (const auto& r : rep_family(f, x).reps)
        for (const auto& k : {mat::identity_eps(f), mat::w_eps(f), mat::w_eps(f) * ueps})
          CHECK_NOTHROW(cat.classify_product_coset(x, y, r * k));
}

TEST_CASE("gxy_hxy_equal exhaustive at p=5") {
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(gxy_hxy_equal(5, x, y) == (x != y));
}
