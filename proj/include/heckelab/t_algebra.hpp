#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "heckelab/cyclotomic.hpp"

namespace heckelab {

// psi(x) = zeta_p^{u x} on the residue field F_p.
struct ResidueCharacter {
  std::int64_t p = 3;
  std::int64_t u = 0;

  bool trivial() const { return u % p == 0; }
  Cyclotomic value(std::int64_t x) const;
  std::complex<double> complex_value(std::int64_t x) const;
};

// Finitely supported sum of c_k z^k with cyclotomic coefficients.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::int64_t p) : p_(p) {}
  static LaurentPolynomial monomial(std::int64_t p, int k, const Cyclotomic& c);
  static LaurentPolynomial constant(const Cyclotomic& c) { return monomial(c.prime(), 0, c); }

  std::int64_t prime() const { return p_; }
  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coefficient(int k) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int min_degree() const;
  int max_degree() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const Cyclotomic& c) const;
  bool operator==(const LaurentPolynomial& o) const { return p_ == o.p_ && terms_ == o.terms_; }

  std::complex<double> evaluate(std::complex<double> z) const;
  std::string to_string() const;

 private:
  void add(int k, const Cyclotomic& c);
  std::int64_t p_;
  std::map<int, Cyclotomic> terms_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);

// Commutative polynomial in t_0, ..., t_{p-1}.
class TPolynomial {
 public:
  using Monomial = std::vector<int>;  // exponent of t_x at index x

  explicit TPolynomial(std::int64_t p) : p_(p) {}
  static TPolynomial t(std::int64_t p, std::int64_t x);
  static TPolynomial constant(const Cyclotomic& c);
  static TPolynomial constant(std::int64_t p, std::int64_t c) { return constant(Cyclotomic(p, c)); }
  // sum over all x of t_x
  static TPolynomial sum_t(std::int64_t p);
  static TPolynomial random(std::int64_t p, int max_degree, int max_terms, std::mt19937_64& rng);

  std::int64_t prime() const { return p_; }
  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  TPolynomial& operator+=(const TPolynomial& o);
  TPolynomial& operator-=(const TPolynomial& o);
  TPolynomial operator*(const TPolynomial& o) const;
  TPolynomial operator*(const Cyclotomic& c) const;
  bool operator==(const TPolynomial& o) const { return p_ == o.p_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void add(const Monomial& m, const Cyclotomic& c);
  std::int64_t p_;
  std::map<Monomial, Cyclotomic> terms_;
};

TPolynomial operator+(TPolynomial a, const TPolynomial& b);
TPolynomial operator-(TPolynomial a, const TPolynomial& b);

// t_x -> z
LaurentPolynomial beta_1(const TPolynomial& P);
// t_x -> psi(x) z^{-1} + z; throws TrivialCharacter
LaurentPolynomial beta_psi(const TPolynomial& P, const ResidueCharacter& psi);
// t_x -> psi(x) z + psi(x)^{-1} z^{-1}, the substitution realised by T_x on
// the special representations at z = chi(p); throws TrivialCharacter
LaurentPolynomial beta_psi_balanced(const TPolynomial& P, const ResidueCharacter& psi);

// (sum_y t_y)(t_0 - t_x)
TPolynomial kernel_element(std::int64_t p, std::int64_t x);

struct SurjectivityWitness {
  std::int64_t x = 0;
  // z^{-1} = a0 beta(t_0) + ax beta(t_x), z = b0 beta(t_0) + bx beta(t_x)
  Cyclotomic a0, ax, b0, bx;
  bool verified = false;
};

SurjectivityWitness surjectivity_witness(const ResidueCharacter& psi);

// Coprimality of ker beta_psi1 and ker beta_psi2 (psi = trivial stands for
// beta_1): an x and the unit q (psi1(x) - psi2(x)) in their sum.
struct CrtWitness {
  std::int64_t x = 0;
  Cyclotomic unit;
  bool image1_constant = false;
  bool image2_constant = false;
  bool is_unit = false;

  bool ok() const { return image1_constant && image2_constant && is_unit; }
};

CrtWitness crt_witness(const ResidueCharacter& psi1, const ResidueCharacter& psi2);

}  // namespace heckelab
