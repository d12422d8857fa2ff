#include "heckelab/hecke.hpp"

#include <atomic>
#include <sstream>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/parallel.hpp"

namespace heckelab {

Rational HeckeElement::coefficient(const DoubleCosetName& name) const {
  auto it = terms.find(name);
  return it == terms.end() ? Rational(0) : it->second;
}

std::string HeckeElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << name.to_string();
  }
  if (first) os << "0";
  return os.str();
}

ProjMatrix probe_matrix(const LocalField& f, StructureProbe k) {
  switch (k) {
    case StructureProbe::Identity:
      return mat::identity_eps(f);
    case StructureProbe::W:
      return mat::w_eps(f);
    case StructureProbe::WUeps:
      return mat::w_eps(f) * mat::u(DualElement::from_int(f, 0, 1));
  }
  return mat::identity_eps(f);
}

std::string to_string(StructureProbe k) {
  switch (k) {
    case StructureProbe::Identity:
      return "1";
    case StructureProbe::W:
      return "w";
    case StructureProbe::WUeps:
      return "w u_eps";
  }
  return "?";
}

std::int64_t structure_count(const LocalField& f, std::int64_t x, std::int64_t y, const ProjMatrix& k) {
  const ProjMatrix gx = mat::g_x(f, x), gy = mat::g_x(f, y);
  const ProjMatrix gx_inv = gx.inverse(), gy_inv = gy.inverse();
  const ProjMatrix k_inv = k.inverse();

  std::vector<ProjMatrix> left;  // g_x^{-1} a g_x
  for (const auto& a : rep_family(f, x).reps) left.push_back(gx_inv * a * gx);
  std::vector<ProjMatrix> right;  // g_y b g_y^{-1} k^{-1}
  for (const auto& r : rep_family(f, y).reps) right.push_back(gy * r.theta() * gy_inv * k_inv);

  std::vector<GMatrix> left_body, right_body;
  for (const auto& m : left) left_body.push_back(mat::body(m));
  for (const auto& m : right) right_body.push_back(mat::body(m));

  std::atomic<std::int64_t> count{0};
  parallel_for(right.size(), [&](std::size_t j) {
    std::int64_t local = 0;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (!in_K(right_body[j] * left_body[i])) continue;
      if (in_K_eps(right[j] * left[i])) ++local;
    }
    count += local;
  });
  return count.load();
}

std::int64_t structure_count(const LocalField& f, std::int64_t x, std::int64_t y, StructureProbe k) {
  return structure_count(f, x, y, probe_matrix(f, k));
}

HeckeElement convolve_T(CosetCatalog& catalog, std::int64_t x, std::int64_t y) {
  const LocalField& f = catalog.field();
  const Rational q2(f.p * f.p);
  HeckeElement out;
  for (StructureProbe k : {StructureProbe::Identity, StructureProbe::W, StructureProbe::WUeps}) {
    const ProjMatrix km = probe_matrix(f, k);
    const DoubleCosetName name = catalog.classify_product_coset(x, y, km);
    const Rational c = Rational(structure_count(f, x, y, km)) / q2;
    auto [it, inserted] = out.terms.emplace(name, c);
    if (!inserted && it->second != c)
      throw Error("convolution value differs inside " + name.to_string() + " for probe " + to_string(k));
  }
  return out;
}

HeckeElement convolve_T(const LocalField& f, std::int64_t x, std::int64_t y) {
  CosetCatalog catalog(f);
  return convolve_T(catalog, x, y);
}

Rational total_mass(CosetCatalog& catalog, const HeckeElement& h) {
  Rational m(0);
  for (const auto& [name, c] : h.terms) m += c * Rational(catalog.get(name).left_coset_count());
  return m;
}

}  // namespace heckelab
