#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "heckelab/numeric.hpp"

namespace heckelab {

// Exact element of Q(zeta_p), p an odd prime, stored as sum c_k zeta^k over
// k = 0..p-1 with the representative normalized so that c_{p-1} = 0.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(std::int64_t p, Rational value = 0);

  static Cyclotomic zeta_power(std::int64_t p, std::int64_t k);

  std::int64_t prime() const { return p_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  // zeta -> zeta^j, j prime to p.
  Cyclotomic galois(std::int64_t j) const;
  Rational norm() const;
  Cyclotomic inverse() const;  // throws std::domain_error on zero

  std::complex<double> to_complex() const;
  bool operator==(const Cyclotomic& o) const { return p_ == o.p_ && c_ == o.c_; }
  std::string to_string() const;

 private:
  void check(const Cyclotomic& o) const;
  void normalize();

  std::int64_t p_ = 3;
  std::vector<Rational> c_ = std::vector<Rational>(3);
};

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator*(Cyclotomic a, const Rational& r);

}  // namespace heckelab
