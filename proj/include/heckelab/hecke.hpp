#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "heckelab/coset_engine.hpp"
#include "heckelab/numeric.hpp"

namespace heckelab {

// Finite rational combination of characteristic functions of double cosets.
struct HeckeElement {
  std::map<DoubleCosetName, Rational> terms;

  Rational coefficient(const DoubleCosetName& name) const;
  bool operator==(const HeckeElement& o) const { return terms == o.terms; }
  std::string to_string() const;
};

enum class StructureProbe { Identity, W, WUeps };

ProjMatrix probe_matrix(const LocalField& f, StructureProbe k);
std::string to_string(StructureProbe k);

// n_k = (ch_{K g_x K} * ch_{K g_y K})(g_x k g_y), counted over the pair
// families; x and y are lifts in Z, so shifted lifts can be compared.
std::int64_t structure_count(const LocalField& f, std::int64_t x, std::int64_t y, const ProjMatrix& k);
std::int64_t structure_count(const LocalField& f, std::int64_t x, std::int64_t y, StructureProbe k);

// T_x * T_y with T_x = q^{-1} ch_{K g_x K}.
HeckeElement convolve_T(CosetCatalog& catalog, std::int64_t x, std::int64_t y);
HeckeElement convolve_T(const LocalField& f, std::int64_t x, std::int64_t y);

// Sum of coefficient times number of left cosets; equals (q+1)^2 for T_x * T_y.
Rational total_mass(CosetCatalog& catalog, const HeckeElement& h);

}  // namespace heckelab
