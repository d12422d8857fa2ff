#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heckelab/invariant_operators.hpp"
#include "heckelab/numeric.hpp"

namespace heckelab {

// Dense integer polynomial, coefficients in increasing degree. The zero
// polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial x();
  static IntPolynomial from_roots(const std::vector<std::int64_t>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int k) const;
  const BigInt& leading() const;
  bool monic() const { return !c_.empty() && c_.back() == 1; }

  BigInt content() const;
  IntPolynomial primitive() const;  // positive leading coefficient
  IntPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;
  int sign_at(const Rational& x) const;
  // sign as x -> +inf (or -inf)
  int sign_at_infinity(bool positive) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& k) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Pseudo-remainder of a by b scaled by a positive constant.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
// Exact quotient a / b; throws std::domain_error when b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);
IntPolynomial squarefree(const IntPolynomial& p);

// Sturm chain p, p', -rem, ... with positive rescaling at each step.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);
int sign_changes(const std::vector<IntPolynomial>& chain, const Rational& x);
int sign_changes_at_infinity(const std::vector<IntPolynomial>& chain, bool positive);

// Distinct real roots in (a, b]; p is replaced by its squarefree part first.
int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b);
int sturm_count_real(const IntPolynomial& p);

// Real roots of squarefree(p), ascending, isolated exactly and refined to tol.
std::vector<double> real_roots(const IntPolynomial& p, double tol = 1e-12);

// Characteristic polynomial of the integer-similar form via
// p_k = (x - d_k) p_{k-1} - off_sq_{k-1} p_{k-2}. throws NonIntegerSpec
IntPolynomial char_poly_exact(const OperatorMatrix& A);

// r(y) = A(y)^2 - y B(y)^2 where p(x) = A(x^2) + x B(x^2); r(x^2) = p(x) p(-x)
// up to sign, so the roots of r are the squares of the roots of p.
IntPolynomial even_odd_resultant(const IntPolynomial& p);

struct WeilCertificate {
  int degree = 0;
  int squarefree_degree = 0;
  int real_roots = 0;           // of squarefree(p) on R
  int r_squarefree_degree = 0;
  int r_roots_in_range = 0;     // of squarefree(r) on [0, 4q]
  bool totally_real = false;
  bool bounded = false;
  bool pass() const { return totally_real && bounded; }
  std::string to_string() const;
};

// throws NotMonic
WeilCertificate certify_weil(const IntPolynomial& p, std::int64_t q);

}  // namespace heckelab
