#include "heckelab/proj_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

// True for a zero known to at least one digit past the integers.
bool certainly_zero(const LocalElement& x) {
  if (!x.is_zero()) return false;
  if (!x.is_exact_zero() && x.absolute_precision() < 1)
    throw PrecisionExhausted("cannot decide " + x.to_string() + " = 0");
  return true;
}

bool certainly_zero(const DualElement& x) { return certainly_zero(x.body()) && certainly_zero(x.tangent()); }

int body_min_valuation(const LocalElement* const* entries) {
  int v = LocalElement::kInfinite;
  for (int i = 0; i < 4; ++i)
    if (!entries[i]->is_zero()) v = std::min(v, entries[i]->valuation());
  if (v == LocalElement::kInfinite) throw PrecisionExhausted("matrix with no nonzero entry");
  for (int i = 0; i < 4; ++i)
    if (entries[i]->is_zero() && !entries[i]->is_exact_zero() && entries[i]->absolute_precision() < v)
      throw PrecisionExhausted("entry " + entries[i]->to_string() + " masks the minimum valuation");
  return v;
}

const LocalElement& body_of(const LocalElement& x) { return x; }
const LocalElement& body_of(const DualElement& x) { return x.body(); }

template <class Scalar>
ProjMatrixT<Scalar> body_normalized(const ProjMatrixT<Scalar>& g) {
  const LocalElement* e[4] = {&body_of(g(0, 0)), &body_of(g(0, 1)), &body_of(g(1, 0)), &body_of(g(1, 1))};
  return g.shifted(-body_min_valuation(e));
}

template <class Scalar>
bool proj_equal_impl(const ProjMatrixT<Scalar>& g0, const ProjMatrixT<Scalar>& h0) {
  const auto g = body_normalized(g0);
  const auto h = body_normalized(h0);
  int pivot = -1;
  for (int i = 0; i < 4 && pivot < 0; ++i)
    if (body_of(g(i / 2, i % 2)).is_unit()) pivot = i;
  const auto& hp = h(pivot / 2, pivot % 2);
  if (!body_of(hp).is_unit()) return false;
  const Scalar lambda = g(pivot / 2, pivot % 2) / hp;
  for (int i = 0; i < 4; ++i)
    if (!certainly_zero(g(i / 2, i % 2) - lambda * h(i / 2, i % 2))) return false;
  return true;
}

}  // namespace

LieElement LieElement::from_ints(const LocalField& f, std::int64_t a, std::int64_t b, std::int64_t c) {
  return {LocalElement::from_int(f, a), LocalElement::from_int(f, b), LocalElement::from_int(f, c)};
}

int LieElement::min_valuation() const {
  return std::min({a.valuation_lower_bound(), b.valuation_lower_bound(), c.valuation_lower_bound()});
}

std::string LieElement::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", -a]]";
}

LieElement operator+(const LieElement& x, const LieElement& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
LieElement operator-(const LieElement& x, const LieElement& y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }

LocalElement trace_pairing(const LieElement& x, const LieElement& y) {
  LocalElement aa = x.a * y.a;
  return aa + aa + x.b * y.c + x.c * y.b;
}

namespace mat {

GMatrix from_ints(const LocalField& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {LocalElement::from_int(f, a), LocalElement::from_int(f, b), LocalElement::from_int(f, c),
          LocalElement::from_int(f, d)};
}

GMatrix identity(const LocalField& f) { return from_ints(f, 1, 0, 0, 1); }
GMatrix w(const LocalField& f) { return from_ints(f, 0, 1, 1, 0); }

GMatrix u(const LocalElement& x) {
  const auto& f = x.field();
  return {LocalElement::from_int(f, 1), x, LocalElement(f), LocalElement::from_int(f, 1)};
}

GMatrix t(const LocalElement& x) { return diag(x, LocalElement::from_int(x.field(), 1)); }

GMatrix diag(const LocalElement& a, const LocalElement& b) {
  return {a, LocalElement(a.field()), LocalElement(a.field()), b};
}

ProjMatrix embed(const GMatrix& g) { return {g(0, 0), g(0, 1), g(1, 0), g(1, 1)}; }

ProjMatrix identity_eps(const LocalField& f) { return embed(identity(f)); }
ProjMatrix w_eps(const LocalField& f) { return embed(w(f)); }

ProjMatrix u(const DualElement& x) {
  const auto& f = x.field();
  return {DualElement::from_int(f, 1), x, DualElement(f), DualElement::from_int(f, 1)};
}

ProjMatrix t(const DualElement& x) {
  const auto& f = x.field();
  return {x, DualElement(f), DualElement(f), DualElement::from_int(f, 1)};
}

GMatrix body(const ProjMatrix& g) { return {g(0, 0).body(), g(0, 1).body(), g(1, 0).body(), g(1, 1).body()}; }

GMatrix tangent(const ProjMatrix& g) {
  return {g(0, 0).tangent(), g(0, 1).tangent(), g(1, 0).tangent(), g(1, 1).tangent()};
}

ProjMatrix g_x(const LocalField& f, std::int64_t x) { return t(DualElement::from_int(f, f.p, x)); }

ProjMatrix g_xy(const LocalField& f, std::int64_t x, std::int64_t y) {
  return {DualElement::from_int(f, f.p, x), DualElement(f), DualElement(f), DualElement::from_int(f, f.p, y)};
}

ProjMatrix h_xy(const LocalField& f, std::int64_t x, std::int64_t y) {
  return {DualElement::from_int(f, -f.p * (x + y), -x * y), DualElement::from_int(f, f.p),
          DualElement::from_int(f, f.p), DualElement::from_int(f, 0, 1)};
}

}  // namespace mat

bool proj_equal(const GMatrix& g, const GMatrix& h) { return proj_equal_impl(g, h); }
bool proj_equal(const ProjMatrix& g, const ProjMatrix& h) { return proj_equal_impl(g, h); }

GMatrix normalized(const GMatrix& g) { return body_normalized(g); }

Decomposition semidirect_decompose(const ProjMatrix& g) {
  const GMatrix A = mat::body(g);
  const GMatrix B = mat::tangent(g);
  const LocalElement det = A.det();
  if (det.is_zero()) throw NonUnit("body of " + g.to_string() + " is singular");
  const LocalElement inv_det = det.inverse();
  const GMatrix Y = B * A.inverse();  // B adj(A); divide by det below
  const LocalElement half = LocalElement::from_rational(g.field(), 1, 2);
  const LocalElement shift = Y.trace() * half;
  LieElement X{(Y(0, 0) - shift) * inv_det, Y(0, 1) * inv_det, Y(1, 0) * inv_det};
  return {X, A};
}

ProjMatrix recompose(const LieElement& X, const GMatrix& h) {
  const GMatrix m{X.a, X.b, X.c, -X.a};
  const GMatrix th = m * h;
  return {DualElement(h(0, 0), th(0, 0)), DualElement(h(0, 1), th(0, 1)), DualElement(h(1, 0), th(1, 0)),
          DualElement(h(1, 1), th(1, 1))};
}

bool in_K(const GMatrix& g) {
  const GMatrix n = normalized(g);
  const LocalElement det = n.det();
  if (det.is_zero()) {
    if (!det.is_exact_zero() && det.absolute_precision() <= 0)
      throw PrecisionExhausted("determinant of " + g.to_string() + " undetermined");
    return false;
  }
  return det.valuation() == 0;
}

bool in_K_eps(const ProjMatrix& g) {
  if (!in_K(mat::body(g))) return false;
  return semidirect_decompose(g).X.is_integral();
}

LieElement apply_adjoint(const GMatrix& g, const LieElement& m) {
  const GMatrix M{m.a, m.b, m.c, -m.a};
  const GMatrix r = g.inverse() * M * g;
  const LocalElement inv_det = g.det().inverse();
  return {r(0, 0) * inv_det, r(0, 1) * inv_det, r(1, 0) * inv_det};
}

}  // namespace heckelab
