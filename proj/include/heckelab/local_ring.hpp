#pragma once

#include <climits>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace heckelab {

// Q_p for an odd prime p, carried with at most `precision` significant
// p-adic digits per element.
struct LocalField {
  std::int64_t p = 3;
  int precision = 8;

  LocalField() = default;
  LocalField(std::int64_t prime, int digits = 8);

  std::int64_t modulus(int k) const;  // p^k, 0 <= k <= precision
  // Largest precision the 62-bit representation allows for this prime.
  static int max_precision(std::int64_t prime);
  bool operator==(const LocalField&) const = default;
};

bool is_odd_prime(std::int64_t n);

// Element of Q_p: p^valuation * unit, unit known modulo p^relative_precision.
// Zero comes in two flavours: exact zero and O(p^A), a zero known only to
// absolute precision A.
class LocalElement {
 public:
  static constexpr int kInfinite = INT_MAX;

  LocalElement() = default;
  explicit LocalElement(const LocalField& field);  // exact zero

  static LocalElement zero(const LocalField& field);
  static LocalElement inexact_zero(const LocalField& field, int absolute_precision);
  static LocalElement from_int(const LocalField& field, std::int64_t n);
  static LocalElement from_rational(const LocalField& field, std::int64_t num, std::int64_t den);
  // p^k * unit; unit must be prime to p.
  static LocalElement uniformizer_power(const LocalField& field, int k, std::int64_t unit = 1);

  const LocalField& field() const { return field_; }
  std::int64_t prime() const { return field_.p; }

  bool is_zero() const { return exact_zero_ || rel_ == 0; }
  bool is_exact_zero() const { return exact_zero_; }

  // Throws PrecisionExhausted for an inexact zero; kInfinite for exact zero.
  int valuation() const;
  // Valuation for nonzero elements, absolute precision for inexact zeros.
  int valuation_lower_bound() const;
  int absolute_precision() const;
  int relative_precision() const { return exact_zero_ ? kInfinite : rel_; }
  std::int64_t unit_part() const { return unit_; }

  bool is_integral() const;
  bool is_unit() const;

  // Exact multiplication by p^k.
  LocalElement shifted(int k) const;
  // Residue in [0, p^k) of an integral element known modulo p^k.
  std::int64_t residue(int k) const;

  LocalElement inverse() const;
  LocalElement operator-() const;
  LocalElement& operator+=(const LocalElement& o);
  LocalElement& operator-=(const LocalElement& o);
  LocalElement& operator*=(const LocalElement& o);
  LocalElement& operator/=(const LocalElement& o);

  // Equal at the common precision.
  bool equals(const LocalElement& o) const;

  std::string to_string() const;

 private:
  LocalElement(const LocalField& f, int v, std::int64_t u, int rel);
  void check_compatible(const LocalElement& o) const;

  LocalField field_{};
  bool exact_zero_ = true;
  int val_ = 0;  // absolute precision when rel_ == 0
  std::int64_t unit_ = 0;
  int rel_ = 0;
};

LocalElement operator+(LocalElement a, const LocalElement& b);
LocalElement operator-(LocalElement a, const LocalElement& b);
LocalElement operator*(LocalElement a, const LocalElement& b);
LocalElement operator/(LocalElement a, const LocalElement& b);
std::ostream& operator<<(std::ostream& os, const LocalElement& x);

// a + eps*b with eps^2 = 0.
class DualElement {
 public:
  DualElement() = default;
  explicit DualElement(const LocalField& field);
  DualElement(LocalElement body, LocalElement tangent);
  // Promotes an element of F.
  DualElement(const LocalElement& body);  // NOLINT(google-explicit-constructor)

  static DualElement from_int(const LocalField& field, std::int64_t body, std::int64_t tangent = 0);

  const LocalElement& body() const { return body_; }
  const LocalElement& tangent() const { return tangent_; }
  const LocalField& field() const { return body_.field(); }

  bool is_unit() const { return body_.is_unit(); }
  DualElement shifted(int k) const { return {body_.shifted(k), tangent_.shifted(k)}; }

  DualElement inverse() const;
  DualElement operator-() const { return {-body_, -tangent_}; }
  DualElement& operator+=(const DualElement& o);
  DualElement& operator-=(const DualElement& o);
  DualElement& operator*=(const DualElement& o);
  DualElement& operator/=(const DualElement& o);

  bool equals(const DualElement& o) const { return body_.equals(o.body_) && tangent_.equals(o.tangent_); }
  std::string to_string() const;

 private:
  LocalElement body_;
  LocalElement tangent_;
};

DualElement operator+(DualElement a, const DualElement& b);
DualElement operator-(DualElement a, const DualElement& b);
DualElement operator*(DualElement a, const DualElement& b);
DualElement operator/(DualElement a, const DualElement& b);

// x -> exp(2 pi i frac(x)); trivial exactly on Z_p.
std::complex<double> psi0(const LocalElement& x);

struct AdditiveCharacter {
  std::int64_t prime = 3;
  std::complex<double> operator()(const LocalElement& x) const;
};

}  // namespace heckelab
