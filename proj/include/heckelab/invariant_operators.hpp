#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "heckelab/hecke.hpp"
#include "heckelab/springer.hpp"
#include "heckelab/t_algebra.hpp"

namespace heckelab {

enum class RepCase { Split, Nonsplit, Nilpotent };

std::string to_string(RepCase c);

// Representation V_{m, chi} with m in one of the three families.
//   split:     m_c, c = p^v * unit, chi(t_p) = chi_pi, conductor of chi on units
//   nonsplit:  m_d, v = v(d), corner_sign = chi(w t_{d^{-1}})
//   nilpotent: psi(u_s) = psi0(p^conductor s); `infinite` for psi = 1
// The split case with v = 0 is the special representation.
struct RepSpec {
  RepCase kind = RepCase::Split;
  std::int64_t q = 3;
  int v = 0;
  int conductor = 0;
  bool infinite = false;
  int corner_sign = 1;
  std::complex<double> chi_pi = 1.0;
  std::int64_t unit = 1;

  static RepSpec split(std::int64_t q, int v_c, int conductor, std::complex<double> chi_pi = 1.0, std::int64_t unit = 1);
  static RepSpec nonsplit(std::int64_t q, int v_d, int conductor, int corner_sign = 1);
  static RepSpec nilpotent(std::int64_t q, int depth);
  static RepSpec nilpotent_trivial(std::int64_t q);
  static RepSpec special(std::int64_t q, std::int64_t c_unit, std::complex<double> chi_pi);

  bool is_special() const { return kind == RepCase::Split && v == 0; }
  // chi_pi is +-1 and every entry of the integer-similar form is an integer.
  bool integral() const;
  void validate() const;
  std::string to_string() const;
};

constexpr int kInfiniteDimension = -1;

int dimension(const RepSpec& spec);

// Real symmetric tridiagonal matrix; off-diagonal entries are square roots
// of the integers off_sq.
struct OperatorMatrix {
  std::int64_t q = 3;
  std::vector<double> diag;
  std::vector<std::int64_t> off_sq;
  bool integral_diag = true;
  bool corner_at_end = false;

  int size() const { return static_cast<int>(diag.size()); }
  double off(int i) const;
  Eigen::MatrixXd dense() const;
  // Tridiagonal with sub-diagonal off_sq and super-diagonal 1.
  Eigen::MatrixXd integer_similar() const;
  // throws NonIntegerSpec
  std::vector<std::int64_t> integer_diag() const;
};

// The matrix of T_0; truncation only used for the nilpotent psi = 1 case.
OperatorMatrix build_matrix(const RepSpec& spec, int truncation = 0);

// psi0(2 c x / p) chi_pi + chi_pi^{-1}
std::complex<double> special_rep_scalar(std::int64_t p, std::int64_t x, std::int64_t c, std::complex<double> chi_pi);
// psi0(c x / p) chi_pi + psi0(-c x / p) chi_pi^{-1}, what the oracle measures
// on V_{m_c, chi}. Real when |chi_pi| = 1.
std::complex<double> special_rep_action(std::int64_t p, std::int64_t x, std::int64_t c, std::complex<double> chi_pi);

// Brute-force model of V^{K_eps} as functions on orbit representatives of
// the affine Springer fiber.
class ActionOracle {
 public:
  explicit ActionOracle(const RepSpec& spec, int truncation = 0);

  const RepSpec& spec() const { return spec_; }
  const FiberData& fiber() const { return fiber_; }
  const LocalField& field() const { return field_; }
  // Orbit indices that carry a basis vector, in increasing order.
  const std::vector<int>& basis() const { return basis_; }
  int size() const { return static_cast<int>(basis_.size()); }

  std::complex<double> character(const GMatrix& z) const;
  std::complex<double> normalization(int r) const;
  // f_r(g) for g in G_eps
  std::complex<double> basis_value(int r, const ProjMatrix& g) const;

  // (u_{y0 + eps y1} g_x f_s)(rep_r) and (w u_{eps z} g_x f_s)(rep_r)
  std::complex<double> u_summand(int s, int r, std::int64_t x, std::int64_t y0, std::int64_t y1) const;
  std::complex<double> w_summand(int s, int r, std::int64_t x, std::int64_t z) const;
  // (T_x f_s)(rep_r)
  std::complex<double> apply(int s, int r, std::int64_t x) const;

  Eigen::MatrixXcd matrix(std::int64_t x) const;

  // Action of ch_{K_eps d K_eps} (vol K_eps = 1) through its left cosets.
  Eigen::MatrixXcd double_coset_matrix(const DoubleCoset& coset) const;
  Eigen::MatrixXcd hecke_matrix(CosetCatalog& catalog, const HeckeElement& h) const;

 private:
  bool stabilizer_acts_trivially(int r) const;
  std::vector<GMatrix> stabilizer_candidates(int r) const;

  RepSpec spec_;
  LocalField field_;
  FiberData fiber_;
  int orbit_count_ = 0;
  std::vector<int> basis_;
  std::vector<std::int64_t> dlog_;  // discrete log on (Z/p^conductor)^x
  std::int64_t dlog_modulus_ = 1;
};

// throws UnsupportedCharacter, PrecisionExhausted
Eigen::MatrixXcd action_oracle(const RepSpec& spec, std::int64_t x, int truncation = 0);

// Evaluates P on the T_x actions of spec (oracle matrices when available)
// and compares with beta_1(P) at T_0, or for the special representation with
// beta_psi_balanced(P) at z = chi_pi where psi(x) = psi0(c x / p).
// throws SpecMismatch
bool consistency_with_representations(const TPolynomial& P, const RepSpec& spec, int truncation = 6);

}  // namespace heckelab
