#include "heckelab/springer.hpp"

#include <algorithm>
#include <stdexcept>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

LocalElement L(const LocalField& f, std::int64_t n) { return LocalElement::from_int(f, n); }
LocalElement P(const LocalField& f, int k, std::int64_t unit = 1) {
  return LocalElement::uniformizer_power(f, k, unit);
}

bool certainly_zero(const LocalElement& x) {
  if (!x.is_zero()) return false;
  if (!x.is_exact_zero() && x.absolute_precision() < 1) throw PrecisionExhausted("cannot decide " + x.to_string());
  return true;
}

// v(x), with zero counting as +infinity.
int val(const LocalElement& x) { return x.is_zero() ? LocalElement::kInfinite : x.valuation(); }

bool fixes(const GMatrix& z, const GMatrix& rep) { return in_K(rep.inverse() * z * rep); }

GMatrix nonsplit_element(const LocalElement& d, const LocalElement& t, const LocalElement& s) {
  return {t, d * s, s, t};
}

}  // namespace

std::string to_string(FiberCase c) {
  switch (c) {
    case FiberCase::Split:
      return "split";
    case FiberCase::Nonsplit:
      return "nonsplit";
    case FiberCase::Nilpotent:
      return "nilpotent";
  }
  return "?";
}

std::int64_t least_nonresidue(std::int64_t p) {
  for (std::int64_t n = 2; n < p; ++n) {
    bool square = false;
    for (std::int64_t t = 1; t < p && !square; ++t) square = (t * t) % p == n;
    if (!square) return n;
  }
  throw std::invalid_argument("no quadratic non-residue");
}

FiberData FiberData::split(const LocalField& f, int v_c, std::int64_t unit) {
  if (v_c < 0) throw std::invalid_argument("v(c) must be >= 0");
  FiberData d;
  d.kind = FiberCase::Split;
  d.param = P(f, v_c, unit);
  d.m = {d.param, LocalElement(f), LocalElement(f)};
  d.v = v_c;
  return d;
}

FiberData FiberData::nonsplit(const LocalField& f, int v_d) {
  if (v_d < 0) throw std::invalid_argument("v(d) must be >= 0");
  FiberData d;
  d.kind = FiberCase::Nonsplit;
  d.param = P(f, v_d, least_nonresidue(f.p));
  d.m = {LocalElement(f), d.param, L(f, 1)};
  d.v = v_d;
  return d;
}

FiberData FiberData::nilpotent(const LocalField& f) {
  FiberData d;
  d.kind = FiberCase::Nilpotent;
  d.param = L(f, 1);
  d.m = {LocalElement(f), L(f, 1), LocalElement(f)};
  return d;
}

int FiberData::rep_count() const {
  switch (kind) {
    case FiberCase::Split:
      return v + 1;
    case FiberCase::Nonsplit:
      return v / 2 + 1;
    case FiberCase::Nilpotent:
      return -1;
  }
  return 0;
}

GMatrix FiberData::representative(int index) const {
  const LocalField& f = field();
  switch (kind) {
    case FiberCase::Split:
      return mat::u(P(f, -index));
    case FiberCase::Nonsplit:
      return mat::t(P(f, index));
    case FiberCase::Nilpotent:
      return mat::t(P(f, -index));
  }
  return mat::identity(f);
}

bool FiberData::in_centralizer(const GMatrix& z) const {
  const GMatrix M{m.a, m.b, m.c, -m.a};
  const GMatrix c = normalized(z) * M;
  const GMatrix e = M * normalized(z);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!certainly_zero(c(i, j) - e(i, j))) return false;
  return true;
}

GMatrix SpringerPoint::matrix() const { return mat::u(b) * mat::t(P(b.field(), r)); }

std::string SpringerPoint::to_string() const {
  return "u_{" + b.to_string() + "} t_{p^" + std::to_string(r) + "}";
}

bool springer_membership(const GMatrix& g, const LieElement& m) { return apply_adjoint(g, m).is_integral(); }

bool satisfies_fiber_constraint(const FiberData& fiber, const SpringerPoint& pt) {
  const int vb = val(pt.b);
  switch (fiber.kind) {
    case FiberCase::Split:
      return vb == LocalElement::kInfinite || vb >= pt.r - fiber.v;
    case FiberCase::Nonsplit:
      return pt.r >= 0 && pt.r <= fiber.v && (vb == LocalElement::kInfinite || 2 * vb >= pt.r);
    case FiberCase::Nilpotent:
      return pt.r <= 0;
  }
  return false;
}

SpringerPoint iwasawa(const GMatrix& g) {
  const LocalElement &a = g(0, 0), &b = g(0, 1), &c = g(1, 0), &d = g(1, 1);
  if (c.is_zero() && d.is_zero()) throw NonUnit("singular matrix " + g.to_string());
  if (c.is_exact_zero() || (!d.is_zero() && d.valuation() <= val(c))) {
    // g [[1, 0], [-c/d, 1]] = [[a - bc/d, b], [0, d]]
    const LocalElement top = a - b * c / d;
    return {b / d, (top / d).valuation()};
  }
  // g [[-d/c, 1], [1, 0]] = [[b - ad/c, a], [0, c]]
  const LocalElement top = b - a * d / c;
  return {a / c, (top / c).valuation()};
}

CanonicalPoint orbit_canonicalize(const FiberData& fiber, const SpringerPoint& pt) {
  if (!satisfies_fiber_constraint(fiber, pt)) throw NotInFiber(pt.to_string() + " not in the " + to_string(fiber.kind) + " fiber");
  const LocalField& f = fiber.field();
  const int vb = val(pt.b);
  CanonicalPoint out;
  switch (fiber.kind) {
    case FiberCase::Split:
      if (vb >= pt.r) {
        out.rep_index = 0;
        out.z = mat::t(P(f, pt.r));
      } else {
        out.rep_index = pt.r - vb;
        out.z = mat::t(pt.b.shifted(out.rep_index));
      }
      return out;
    case FiberCase::Nonsplit: {
      const LocalElement& d = fiber.param;
      int r1 = pt.r;
      GMatrix z = mat::identity(f);
      if (vb < pt.r) {
        const int r0 = std::min(2 * vb, fiber.v);
        const int k = r0 - pt.r;
        z = nonsplit_element(d, pt.b, L(f, 1)).shifted(-k);
        r1 = r0 - pt.r;
      }
      if (r1 > fiber.v / 2) {
        // t_{p^{r1}} K = w t_{d^{-1}} t_{p^{v(d) - r1}} K
        z = z * mat::w(f) * mat::t(d.inverse());
        r1 = fiber.v - r1;
        out.reflected = true;
      }
      out.rep_index = r1;
      out.z = z;
      return out;
    }
    case FiberCase::Nilpotent:
      out.rep_index = -pt.r;
      out.z = mat::u(pt.b);
      return out;
  }
  return out;
}

bool nonsplit_reflection_identity(const FiberData& fiber, int r) {
  const LocalField& f = fiber.field();
  const LocalElement& d = fiber.param;
  const GMatrix lhs = GMatrix{LocalElement(f), d.shifted(-r), P(f, -r), LocalElement(f)} * mat::t(P(f, r));
  const GMatrix rhs = mat::t(P(f, fiber.v - r)) * GMatrix{LocalElement(f), d.shifted(-fiber.v), L(f, 1), LocalElement(f)};
  return proj_equal(lhs, rhs);
}

int nonsplit_depth_invariant(const GMatrix& g, const LocalElement& d) {
  const LocalField& f = d.field();
  const LieElement m{LocalElement(f), d, L(f, 1)};
  const LieElement x = apply_adjoint(g, m);
  if (!x.is_integral()) throw NotInFiber("g^{-1} m_d g not integral for g = " + g.to_string());
  return x.min_valuation();
}

StabilizerReport stabilizer_conductor_check(const FiberData& fiber, int r) {
  const LocalField& f = fiber.field();
  const std::int64_t p = f.p;
  const GMatrix rep = fiber.representative(r);
  StabilizerReport rpt;
  rpt.r = r;
  auto sample = [&](const GMatrix& z) {
    ++rpt.samples;
    rpt.samples_fix = rpt.samples_fix && fixes(z, rep);
  };
  auto boundary = [&](const GMatrix& z, const std::string& label) {
    rpt.has_boundary = true;
    rpt.boundary_moves = !fixes(z, rep);
    rpt.boundary_witness = label;
  };

  switch (fiber.kind) {
    case FiberCase::Split: {
      // T_(r)
      for (std::int64_t u = 1; u < p; ++u)
        for (int j = 0; j < 3; ++j) {
          if (r == 0) {
            sample(mat::t(L(f, u) + P(f, j + 1)));
          } else {
            sample(mat::t(L(f, 1) + P(f, r + j, u)));
          }
        }
      if (r >= 2) {
        boundary(mat::t(L(f, 1) + P(f, r - 1)), "t_{1+p^" + std::to_string(r - 1) + "}");
      } else if (r == 1) {
        boundary(mat::t(L(f, 2)), "t_2");
      } else {
        boundary(mat::t(P(f, 1)), "t_p");
      }
      break;
    }
    case FiberCase::Nonsplit: {
      const LocalElement& d = fiber.param;
      const int R = fiber.v / 2;
      const int level = R - r;
      if (level == 0 && fiber.v % 2 == 0) {
        for (int i = -2; i <= 2; ++i)
          for (std::int64_t u = 1; u < p; ++u) {
            sample(nonsplit_element(d, L(f, 1), P(f, i, u)));
            sample(nonsplit_element(d, P(f, i, u), L(f, 1)));
          }
        sample(nonsplit_element(d, LocalElement(f), L(f, 1)));
        break;
      }
      for (int j = 0; j < 3; ++j)
        for (std::int64_t u = 1; u < p; ++u) sample(nonsplit_element(d, L(f, 1), P(f, level - R + j, u)));
      boundary(nonsplit_element(d, L(f, 1), P(f, level - R - 1)),
               "[[1, d s], [s, 1]], v(s)=" + std::to_string(level - R - 1));
      break;
    }
    case FiberCase::Nilpotent: {
      for (int j = 0; j < 3; ++j)
        for (std::int64_t u = 1; u < p; ++u) sample(mat::u(P(f, -r + j, u)));
      boundary(mat::u(P(f, -r - 1)), "u_{p^" + std::to_string(-r - 1) + "}");
      break;
    }
  }
  return rpt;
}

}  // namespace heckelab
