#include "doctest.h"
#include "heckelab/hecke.hpp"

using namespace heckelab;

TEST_CASE("structure constants q=3") {
  LocalField f(3);
  for (std::int64_t x = 0; x < 3; ++x)
    for (std::int64_t y = 0; y < 3; ++y) {
      CHECK(structure_count(f, x, y, StructureProbe::Identity) == 1);
      CHECK(structure_count(f, x, y, StructureProbe::W) == (x == y ? 12 : 3));
      CHECK(structure_count(f, x, y, StructureProbe::WUeps) == 3);
    }
}

TEST_CASE("structure constants do not depend on lifts") {
  LocalField f(5);
  for (std::int64_t x = 0; x < 5; ++x)
    for (std::int64_t y : {x, (x + 2) % 5})
      for (auto k : {StructureProbe::Identity, StructureProbe::W, StructureProbe::WUeps})
        CHECK(structure_count(f, x, y, k) == structure_count(f, x + 5, y - 5, k));
}

TEST_CASE("T_x * T_y at q=3") {
  LocalField f(3);
  CosetCatalog cat(f);
  auto same = convolve_T(cat, 1, 1);
  CHECK(same.terms.size() == 3);
  CHECK(same.coefficient(DoubleCosetName::make(CosetKind::GxGy, 1, 1)) == Rational(1, 9));
  CHECK(same.coefficient(DoubleCosetName::make(CosetKind::Gxy, 1, 1)) == Rational(4, 3));
  CHECK(same.coefficient(DoubleCosetName::make(CosetKind::Hxy, 1, 1)) == Rational(1, 3));
  auto diff = convolve_T(cat, 0, 2);
  CHECK(diff.terms.size() == 2);
  CHECK(diff.coefficient(DoubleCosetName::make(CosetKind::GxGy, 0, 2)) == Rational(1, 9));
  CHECK(diff.coefficient(DoubleCosetName::make(CosetKind::Gxy, 0, 2)) == Rational(1, 3));
  CHECK(total_mass(cat, same) == 16);
  CHECK(total_mass(cat, diff) == 16);
}

TEST_CASE("commutativity and mass at q=5") {
  LocalField f(5);
  CosetCatalog cat(f);
  for (std::int64_t x = 0; x < 5; ++x)
    for (std::int64_t y = x; y < 5; ++y) {
      auto a = convolve_T(cat, x, y), b = convolve_T(cat, y, x);
      CHECK(a == b);
      CHECK(total_mass(cat, a) == 36);
    }
}
