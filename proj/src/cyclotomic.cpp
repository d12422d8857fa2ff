#include "heckelab/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "heckelab/local_ring.hpp"

namespace heckelab {

Cyclotomic::Cyclotomic(std::int64_t p, Rational value) : p_(p), c_(static_cast<std::size_t>(p)) {
  if (!is_odd_prime(p)) throw std::invalid_argument("cyclotomic field needs an odd prime");
  c_[0] = std::move(value);
}

Cyclotomic Cyclotomic::zeta_power(std::int64_t p, std::int64_t k) {
  Cyclotomic z(p);
  z.c_[0] = 0;
  z.c_[static_cast<std::size_t>(((k % p) + p) % p)] = 1;
  z.normalize();
  return z;
}

void Cyclotomic::check(const Cyclotomic& o) const {
  if (p_ != o.p_) throw std::invalid_argument("cyclotomic fields differ");
}

// 1 + zeta + ... + zeta^{p-1} = 0
void Cyclotomic::normalize() {
  const Rational top = c_.back();
  if (top == 0) return;
  for (auto& x : c_) x -= top;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("not rational: " + to_string());
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check(o);
  const std::size_t p = c_.size();
  std::vector<Rational> r(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < p; ++j)
      if (o.c_[j] != 0) r[(i + j) % p] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Cyclotomic Cyclotomic::galois(std::int64_t j) const {
  if (j % p_ == 0) throw std::invalid_argument("galois exponent divisible by p");
  Cyclotomic r(p_);
  r.c_[0] = 0;
  for (std::int64_t k = 0; k < p_; ++k) r.c_[static_cast<std::size_t>((((k * j) % p_) + p_) % p_)] += c_[k];
  r.normalize();
  return r;
}

Rational Cyclotomic::norm() const {
  Cyclotomic prod(p_, 1);
  for (std::int64_t j = 1; j < p_; ++j) prod *= galois(j);
  return prod.rational_value();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_p)");
  Cyclotomic others(p_, 1);
  for (std::int64_t j = 2; j < p_; ++j) others *= galois(j);
  const Rational n = (others * *this).rational_value();
  return others * (Rational(1) / n);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::int64_t k = 0; k < p_; ++k)
    if (c_[k] != 0)
      z += static_cast<double>(c_[k]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p_));
  return z;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::int64_t k = 0; k < p_; ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k];
    if (k > 0) os << "*z^" << k;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }

}  // namespace heckelab
