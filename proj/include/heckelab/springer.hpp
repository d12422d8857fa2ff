#pragma once

#include <string>
#include <vector>

#include "heckelab/proj_group.hpp"

namespace heckelab {

enum class FiberCase { Split, Nonsplit, Nilpotent };

std::string to_string(FiberCase c);

// The element m of one of the three families together with its parameter.
struct FiberData {
  FiberCase kind = FiberCase::Split;
  LieElement m;
  LocalElement param;  // c for split, d for nonsplit
  int v = 0;           // v(c) or v(d)

  // m_c = diag(c, -c) with c = p^{v_c} * unit
  static FiberData split(const LocalField& f, int v_c, std::int64_t unit = 1);
  // m_d = [[0, d], [1, 0]] with d = p^{v_d} * (least quadratic non-residue)
  static FiberData nonsplit(const LocalField& f, int v_d);
  // m = [[0, 1], [0, 0]]
  static FiberData nilpotent(const LocalField& f);

  const LocalField& field() const { return m.a.field(); }
  // Number of orbit representatives; -1 when unbounded.
  int rep_count() const;
  // split: u_{p^{-r}}; nonsplit: t_{p^r}; nilpotent: t_{p^{-r}}
  GMatrix representative(int index) const;
  bool in_centralizer(const GMatrix& z) const;
};

std::int64_t least_nonresidue(std::int64_t p);

// u_b t_{p^r} K
struct SpringerPoint {
  LocalElement b;
  int r = 0;

  GMatrix matrix() const;
  std::string to_string() const;
};

// g^{-1} m g integral.
bool springer_membership(const GMatrix& g, const LieElement& m);
// Coordinate constraint of the fiber lemmas.
bool satisfies_fiber_constraint(const FiberData& fiber, const SpringerPoint& point);
// Writes gK as u_b t_{p^r} K.
SpringerPoint iwasawa(const GMatrix& g);

struct CanonicalPoint {
  int rep_index = 0;
  GMatrix z;  // in Z_G(m), z * representative(rep_index) K = point K
  bool reflected = false;
};

CanonicalPoint orbit_canonicalize(const FiberData& fiber, const SpringerPoint& point);

// [[0, d p^{-r}], [p^{-r}, 0]] t_{p^r} = t_{p^{v(d)-r}} [[0, d/p^{v(d)}], [1, 0]] up to scalars.
bool nonsplit_reflection_identity(const FiberData& fiber, int r);

// Smallest l >= 0 with p^{-l-1} g^{-1} m_d g not integral; throws NotInFiber.
int nonsplit_depth_invariant(const GMatrix& g, const LocalElement& d);

struct StabilizerReport {
  int r = 0;
  int samples = 0;
  bool samples_fix = true;
  bool has_boundary = false;  // false when the stabilizer is the whole centralizer
  bool boundary_moves = false;
  std::string boundary_witness;

  bool ok() const { return samples_fix && (!has_boundary || boundary_moves); }
};

// Checks the asserted stabilizer of representative(r): sampled elements fix
// it, an element just outside moves it.
StabilizerReport stabilizer_conductor_check(const FiberData& fiber, int r);

}  // namespace heckelab
