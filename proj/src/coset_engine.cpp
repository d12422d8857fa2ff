#include "heckelab/coset_engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

DualElement D(const LocalField& f, std::int64_t body, std::int64_t tangent = 0) {
  return DualElement::from_int(f, body, tangent);
}

ProjMatrix int_matrix(const LocalField& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return mat::embed(mat::from_ints(f, a, b, c, d));
}

// Left cosets of K_eps d K_eps when the body of d is a scalar times an
// element of K: they correspond to the GL2(F_p)-orbit of pi X mod pi.
std::vector<ProjMatrix> residue_orbit_reps(const ProjMatrix& d) {
  const LocalField& f = d.field();
  const std::int64_t p = f.p;
  const Decomposition dec = semidirect_decompose(d);
  const LieElement Z = dec.X.shifted(1);
  if (!Z.is_integral()) throw std::logic_error("tangent of " + d.to_string() + " too deep for orbit method");
  const std::int64_t za = Z.a.residue(1), zb = Z.b.residue(1), zc = Z.c.residue(1);

  std::vector<std::int64_t> inv(p, 0);
  for (std::int64_t t = 1; t < p; ++t)
    for (std::int64_t s = 1; s < p; ++s)
      if (mod(t * s, p) == 1) inv[t] = s;

  std::vector<ProjMatrix> reps;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t e = 0; e < p; ++e) {
          const std::int64_t det = mod(a * e - b * c, p);
          if (det == 0) continue;
          // k Z k^{-1} = (k Z) adj(k) / det(k)
          const std::int64_t m00 = a * za + b * zc, m01 = a * zb - b * za;
          const std::int64_t m10 = c * za + e * zc, m11 = c * zb - e * za;
          const std::int64_t r00 = mod(m00 * e - m01 * c, p) * inv[det];
          const std::int64_t r01 = mod(-m00 * b + m01 * a, p) * inv[det];
          const std::int64_t r10 = mod(m10 * e - m11 * c, p) * inv[det];
          if (seen.emplace(mod(r00, p), mod(r01, p), mod(r10, p)).second) reps.push_back(int_matrix(f, a, b, c, e));
        }
  return reps;
}

std::vector<ProjMatrix> gxgy_left_reps(const LocalField& f) {
  const std::int64_t p = f.p;
  std::vector<ProjMatrix> base;
  for (std::int64_t a = 0; a < p * p; ++a) base.push_back(mat::u(D(f, a)));
  for (std::int64_t b = 0; b < p; ++b) base.push_back(mat::w_eps(f) * mat::u(D(f, p * b)));
  std::vector<ProjMatrix> reps;
  for (const auto& k0 : base)
    for (std::int64_t b = 0; b < p * p; ++b) reps.push_back(k0 * mat::u(D(f, 0, b)));
  return reps;
}

}  // namespace

CosetRepFamily rep_family(const LocalField& f, std::int64_t x) {
  CosetRepFamily fam;
  fam.x = x;
  for (std::int64_t y0 = 0; y0 < f.p; ++y0)
    for (std::int64_t y1 = 0; y1 < f.p; ++y1) {
      fam.reps.push_back(mat::u(D(f, y0, y1)));
      fam.tags.push_back("u_{" + std::to_string(y0) + "+eps" + std::to_string(y1) + "}");
    }
  for (std::int64_t z = 0; z < f.p; ++z) {
    fam.reps.push_back(mat::w_eps(f) * mat::u(D(f, 0, z)));
    fam.tags.push_back("w u_{eps" + std::to_string(z) + "}");
  }
  return fam;
}

bool in_opposite_stabilizer(const ProjMatrix& k, const ProjMatrix& h) { return in_K_eps(h.inverse() * k * h); }

bool pairwise_inequivalent(const CosetRepFamily& family, const ProjMatrix& h) {
  const auto& r = family.reps;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (in_opposite_stabilizer(r[i].inverse() * r[j], h)) return false;
  return true;
}

DoubleCosetName DoubleCosetName::make(CosetKind kind, std::int64_t x, std::int64_t y) {
  DoubleCosetName n;
  n.kind = kind;
  n.x = std::min(x, y);
  n.y = std::max(x, y);
  if (kind == CosetKind::Hxy && x != y) n.kind = CosetKind::Gxy;
  return n;
}

std::string DoubleCosetName::to_string() const {
  const std::string args = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  switch (kind) {
    case CosetKind::GxGy:
      return "GxGy" + args;
    case CosetKind::Gxy:
      return "Gxy" + args;
    case CosetKind::Hxy:
      return "Hxy" + args;
    case CosetKind::Other:
      break;
  }
  return "other(" + witness + ")";
}

int body_type(const ProjMatrix& g) {
  const GMatrix a = normalized(mat::body(g));
  return a.det().valuation();
}

DoubleCoset::DoubleCoset(DoubleCosetName name, ProjMatrix representative, std::vector<ProjMatrix> left_reps)
    : name_(std::move(name)), d_(std::move(representative)), left_reps_(std::move(left_reps)) {
  body_type_ = body_type(d_);
  for (const auto& k : left_reps_) {
    probes_.push_back((k * d_).inverse());
    body_probes_.push_back(mat::body(probes_.back()));
  }
}

bool DoubleCoset::contains(const ProjMatrix& g) const {
  if (body_type(g) != body_type_) return false;
  const GMatrix gb = mat::body(g);
  for (std::size_t i = 0; i < probes_.size(); ++i) {
    if (!in_K(body_probes_[i] * gb)) continue;
    if (in_K_eps(probes_[i] * g)) return true;
  }
  return false;
}

bool DoubleCoset::left_cosets_distinct() const {
  for (std::size_t i = 0; i < probes_.size(); ++i)
    for (std::size_t j = i + 1; j < probes_.size(); ++j)
      if (in_K_eps(probes_[i] * left_reps_[j] * d_)) return false;
  return true;
}

ProjMatrix named_representative(const LocalField& f, const DoubleCosetName& name) {
  switch (name.kind) {
    case CosetKind::GxGy:
      return mat::g_x(f, name.x) * mat::g_x(f, name.y);
    case CosetKind::Gxy:
      return mat::g_xy(f, name.x, name.y);
    case CosetKind::Hxy:
      return mat::h_xy(f, name.x, name.y);
    case CosetKind::Other:
      break;
  }
  throw std::invalid_argument("no representative for " + name.to_string());
}

DoubleCoset build_double_coset(const LocalField& f, const DoubleCosetName& name) {
  ProjMatrix d = named_representative(f, name);
  std::vector<ProjMatrix> reps = name.kind == CosetKind::GxGy ? gxgy_left_reps(f) : residue_orbit_reps(d);
  return DoubleCoset(name, std::move(d), std::move(reps));
}

const DoubleCoset& CosetCatalog::get(const DoubleCosetName& name) {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(name);
  if (it == cache_.end())
    it = cache_.emplace(name, std::make_unique<DoubleCoset>(build_double_coset(field_, name))).first;
  return *it->second;
}

DoubleCosetName CosetCatalog::classify_product_coset(std::int64_t x, std::int64_t y, const ProjMatrix& l) {
  const std::int64_t p = field_.p;
  const std::int64_t xr = mod(x, p), yr = mod(y, p);
  const ProjMatrix g = mat::g_x(field_, x) * l * mat::g_x(field_, y);
  std::vector<DoubleCosetName> candidates = {DoubleCosetName::make(CosetKind::GxGy, xr, yr),
                                             DoubleCosetName::make(CosetKind::Gxy, xr, yr)};
  if (xr == yr) candidates.push_back(DoubleCosetName::make(CosetKind::Hxy, xr, yr));
  for (const auto& name : candidates)
    if (get(name).contains(g)) return name;
  throw Unclassified("g_x l g_y outside the named cosets: x=" + std::to_string(x) + " y=" + std::to_string(y) +
                     " l=" + l.to_string());
}

DoubleCosetName classify_product_coset(const LocalField& f, std::int64_t x, std::int64_t y, const ProjMatrix& l) {
  CosetCatalog catalog(f);
  return catalog.classify_product_coset(x, y, l);
}

bool gxy_hxy_equal(std::int64_t p, std::int64_t x, std::int64_t y) {
  x = mod(x, p);
  y = mod(y, p);
  for (std::int64_t a11 = 0; a11 < p; ++a11)
    for (std::int64_t a12 = 0; a12 < p; ++a12) {
      const std::int64_t a21 = a11 * x, a22 = a12 * y;
      if (mod(a11 * a22 - a12 * a21, p) != 0) return true;
    }
  return false;
}

}  // namespace heckelab
