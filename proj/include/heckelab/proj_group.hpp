#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "heckelab/local_ring.hpp"

namespace heckelab {

// 2x2 matrix taken modulo scalars. Scalar is LocalElement (PGL2(F)) or
// DualElement (PGL2(F_eps)).
template <class Scalar>
class ProjMatrixT {
 public:
  ProjMatrixT() = default;
  ProjMatrixT(Scalar a, Scalar b, Scalar c, Scalar d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  const Scalar& operator()(int i, int j) const { return e_[2 * i + j]; }
  const LocalField& field() const { return e_[0].field(); }

  ProjMatrixT operator*(const ProjMatrixT& o) const {
    const auto& a = e_;
    const auto& b = o.e_;
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
  }

  // Adjugate; the inverse modulo scalars.
  ProjMatrixT inverse() const { return {e_[3], -e_[1], -e_[2], e_[0]}; }
  ProjMatrixT theta() const { return {e_[0], e_[2], e_[1], e_[3]}; }
  ProjMatrixT scaled(const Scalar& s) const { return {e_[0] * s, e_[1] * s, e_[2] * s, e_[3] * s}; }
  ProjMatrixT shifted(int k) const {
    return {e_[0].shifted(k), e_[1].shifted(k), e_[2].shifted(k), e_[3].shifted(k)};
  }

  Scalar det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Scalar trace() const { return e_[0] + e_[3]; }

  std::string to_string() const {
    return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
           e_[3].to_string() + "]]";
  }

 private:
  std::array<Scalar, 4> e_;
};

using GMatrix = ProjMatrixT<LocalElement>;
using ProjMatrix = ProjMatrixT<DualElement>;

// Traceless [[a, b], [c, -a]].
struct LieElement {
  LocalElement a, b, c;

  static LieElement zero(const LocalField& f) { return {LocalElement(f), LocalElement(f), LocalElement(f)}; }
  static LieElement from_ints(const LocalField& f, std::int64_t a, std::int64_t b, std::int64_t c);

  bool is_integral() const { return a.is_integral() && b.is_integral() && c.is_integral(); }
  // Minimum valuation of the entries (kInfinite for 0).
  int min_valuation() const;
  LocalElement det() const { return -(a * a) - b * c; }
  LieElement shifted(int k) const { return {a.shifted(k), b.shifted(k), c.shifted(k)}; }
  bool equals(const LieElement& o) const { return a.equals(o.a) && b.equals(o.b) && c.equals(o.c); }
  std::string to_string() const;
};

LieElement operator+(const LieElement& x, const LieElement& y);
LieElement operator-(const LieElement& x, const LieElement& y);
// tr(XY)
LocalElement trace_pairing(const LieElement& x, const LieElement& y);

namespace mat {

GMatrix identity(const LocalField& f);
GMatrix w(const LocalField& f);
GMatrix u(const LocalElement& x);
GMatrix t(const LocalElement& x);
GMatrix diag(const LocalElement& a, const LocalElement& b);
GMatrix from_ints(const LocalField& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

ProjMatrix identity_eps(const LocalField& f);
ProjMatrix w_eps(const LocalField& f);
ProjMatrix u(const DualElement& x);
ProjMatrix t(const DualElement& x);
ProjMatrix embed(const GMatrix& g);
GMatrix body(const ProjMatrix& g);
GMatrix tangent(const ProjMatrix& g);

// g_x = diag(pi + eps x, 1)
ProjMatrix g_x(const LocalField& f, std::int64_t x);
// g_{x,y} = diag(pi + eps x, pi + eps y)
ProjMatrix g_xy(const LocalField& f, std::int64_t x, std::int64_t y);
// h_{x,y} = [[-pi(x+y) - eps xy, pi], [pi, eps]]
ProjMatrix h_xy(const LocalField& f, std::int64_t x, std::int64_t y);

}  // namespace mat

// Equality modulo scalars.
bool proj_equal(const GMatrix& g, const GMatrix& h);
bool proj_equal(const ProjMatrix& g, const ProjMatrix& h);

// Representative whose entries have minimum valuation 0.
GMatrix normalized(const GMatrix& g);

struct Decomposition {
  LieElement X;
  GMatrix h;
};

// g = (1 + eps X) h modulo scalars.
Decomposition semidirect_decompose(const ProjMatrix& g);
ProjMatrix recompose(const LieElement& X, const GMatrix& h);

bool in_K(const GMatrix& g);
bool in_K_eps(const ProjMatrix& g);

// g^{-1} m g
LieElement apply_adjoint(const GMatrix& g, const LieElement& m);

}  // namespace heckelab
