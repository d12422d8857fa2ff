#include "heckelab/local_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(a) * b % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t reduce(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = reduce(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t qt = old_r / r;
    std::int64_t t = old_r - qt * r;
    old_r = r;
    r = t;
    t = old_s - qt * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw NonUnit("residue not invertible");
  return reduce(old_s, m);
}

// Splits n = p^v * m with m prime to p; n != 0.
int strip(std::int64_t& n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

bool is_odd_prime(std::int64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

LocalField::LocalField(std::int64_t prime, int digits) : p(prime), precision(digits) {
  if (!is_odd_prime(prime)) throw std::invalid_argument("p must be an odd prime");
  if (digits < 1) throw std::invalid_argument("precision must be positive");
  long double bound = std::pow(static_cast<long double>(prime), digits);
  if (bound >= 4.6e18L) throw std::invalid_argument("p^precision exceeds 62 bits");
}

int LocalField::max_precision(std::int64_t prime) {
  int k = 0;
  long double bound = 1;
  while (bound * static_cast<long double>(prime) < 4.6e18L) {
    bound *= static_cast<long double>(prime);
    ++k;
  }
  return k;
}

std::int64_t LocalField::modulus(int k) const {
  if (k < 0 || k > precision) throw std::out_of_range("modulus exponent");
  std::int64_t m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  return m;
}

LocalElement::LocalElement(const LocalField& field) : field_(field) {}

LocalElement::LocalElement(const LocalField& f, int v, std::int64_t u, int rel)
    : field_(f), exact_zero_(false), val_(v), unit_(u), rel_(rel) {}

LocalElement LocalElement::zero(const LocalField& field) { return LocalElement(field); }

LocalElement LocalElement::inexact_zero(const LocalField& field, int absolute_precision) {
  return LocalElement(field, absolute_precision, 0, 0);
}

LocalElement LocalElement::from_int(const LocalField& field, std::int64_t n) {
  return from_rational(field, n, 1);
}

LocalElement LocalElement::from_rational(const LocalField& field, std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (num == 0) return zero(field);
  int v = strip(num, field.p) - strip(den, field.p);
  std::int64_t m = field.modulus(field.precision);
  std::int64_t u = mulmod(reduce(num, m), invmod(den, m), m);
  return LocalElement(field, v, u, field.precision);
}

LocalElement LocalElement::uniformizer_power(const LocalField& field, int k, std::int64_t unit) {
  if (unit % field.p == 0) throw std::invalid_argument("unit divisible by p");
  std::int64_t m = field.modulus(field.precision);
  return LocalElement(field, k, reduce(unit, m), field.precision);
}

int LocalElement::valuation() const {
  if (exact_zero_) return kInfinite;
  if (rel_ == 0) throw PrecisionExhausted("valuation of O(p^" + std::to_string(val_) + ")");
  return val_;
}

int LocalElement::valuation_lower_bound() const { return exact_zero_ ? kInfinite : val_; }

int LocalElement::absolute_precision() const { return exact_zero_ ? kInfinite : val_ + rel_; }

bool LocalElement::is_integral() const {
  if (exact_zero_) return true;
  if (rel_ == 0 && val_ < 0) throw PrecisionExhausted("integrality of O(p^" + std::to_string(val_) + ")");
  return val_ >= 0;
}

bool LocalElement::is_unit() const {
  if (exact_zero_) return false;
  if (rel_ == 0) {
    if (val_ > 0) return false;
    throw PrecisionExhausted("unit test on O(p^" + std::to_string(val_) + ")");
  }
  return val_ == 0;
}

LocalElement LocalElement::shifted(int k) const {
  if (exact_zero_) return *this;
  LocalElement r = *this;
  r.val_ += k;
  return r;
}

std::int64_t LocalElement::residue(int k) const {
  if (!is_integral()) throw std::domain_error("residue of non-integral element");
  if (absolute_precision() < k) throw PrecisionExhausted("residue beyond known digits");
  if (exact_zero_ || rel_ == 0 || val_ >= k) return 0;
  std::int64_t m = field_.modulus(k);
  return mulmod(reduce(unit_, m), field_.modulus(val_), m);
}

void LocalElement::check_compatible(const LocalElement& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("operands from different local fields");
}

LocalElement LocalElement::inverse() const {
  if (exact_zero_) throw NonUnit("inverse of zero");
  if (rel_ == 0) throw PrecisionExhausted("inverse of O(p^" + std::to_string(val_) + ")");
  std::int64_t m = field_.modulus(rel_);
  return LocalElement(field_, -val_, invmod(unit_, m), rel_);
}

LocalElement LocalElement::operator-() const {
  if (is_zero()) return *this;
  std::int64_t m = field_.modulus(rel_);
  return LocalElement(field_, val_, reduce(-unit_, m), rel_);
}

LocalElement& LocalElement::operator+=(const LocalElement& o) {
  check_compatible(o);
  if (o.exact_zero_) return *this;
  if (exact_zero_) return *this = o;
  const int abs_prec = std::min(absolute_precision(), o.absolute_precision());
  int v0 = kInfinite;
  if (rel_ > 0) v0 = std::min(v0, val_);
  if (o.rel_ > 0) v0 = std::min(v0, o.val_);
  if (v0 >= abs_prec) return *this = inexact_zero(field_, abs_prec);
  const int span = abs_prec - v0;
  const std::int64_t m = field_.modulus(span);
  std::int64_t s = 0;
  const LocalElement* const operands[] = {this, &o};
  for (const LocalElement* x : operands) {
    if (x->rel_ == 0 || x->val_ >= abs_prec) continue;
    s = reduce(s + mulmod(reduce(x->unit_, m), field_.modulus(x->val_ - v0), m), m);
  }
  if (s == 0) return *this = inexact_zero(field_, abs_prec);
  int k = strip(s, field_.p);
  const int rel = std::min(span - k, field_.precision);
  *this = LocalElement(field_, v0 + k, reduce(s, field_.modulus(rel)), rel);
  return *this;
}

LocalElement& LocalElement::operator-=(const LocalElement& o) { return *this += -o; }

LocalElement& LocalElement::operator*=(const LocalElement& o) {
  check_compatible(o);
  if (exact_zero_) return *this;
  if (o.exact_zero_) return *this = o;
  if (rel_ == 0 || o.rel_ == 0) {
    return *this = inexact_zero(field_, val_ + o.val_);
  }
  const int rel = std::min(rel_, o.rel_);
  const std::int64_t m = field_.modulus(rel);
  *this = LocalElement(field_, val_ + o.val_, mulmod(unit_, o.unit_, m), rel);
  return *this;
}

LocalElement& LocalElement::operator/=(const LocalElement& o) { return *this *= o.inverse(); }

bool LocalElement::equals(const LocalElement& o) const { return (*this - o).is_zero(); }

std::string LocalElement::to_string() const {
  std::ostringstream os;
  const auto p = field_.p;
  if (exact_zero_) return "0";
  if (rel_ == 0) {
    os << "O(" << p << "^" << val_ << ")";
    return os.str();
  }
  os << unit_ << "*" << p << "^" << val_ << " + O(" << p << "^" << val_ + rel_ << ")";
  return os.str();
}

LocalElement operator+(LocalElement a, const LocalElement& b) { return a += b; }
LocalElement operator-(LocalElement a, const LocalElement& b) { return a -= b; }
LocalElement operator*(LocalElement a, const LocalElement& b) { return a *= b; }
LocalElement operator/(LocalElement a, const LocalElement& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const LocalElement& x) { return os << x.to_string(); }

DualElement::DualElement(const LocalField& field) : body_(field), tangent_(field) {}

DualElement::DualElement(LocalElement body, LocalElement tangent)
    : body_(std::move(body)), tangent_(std::move(tangent)) {
  if (!(body_.field() == tangent_.field())) throw std::invalid_argument("mixed local fields");
}

DualElement::DualElement(const LocalElement& body) : body_(body), tangent_(body.field()) {}

DualElement DualElement::from_int(const LocalField& field, std::int64_t body, std::int64_t tangent) {
  return {LocalElement::from_int(field, body), LocalElement::from_int(field, tangent)};
}

DualElement DualElement::inverse() const {
  if (body_.is_zero()) throw NonUnit("dual number with zero body");
  LocalElement a_inv = body_.inverse();
  return {a_inv, -(a_inv * a_inv * tangent_)};
}

DualElement& DualElement::operator+=(const DualElement& o) {
  body_ += o.body_;
  tangent_ += o.tangent_;
  return *this;
}

DualElement& DualElement::operator-=(const DualElement& o) {
  body_ -= o.body_;
  tangent_ -= o.tangent_;
  return *this;
}

DualElement& DualElement::operator*=(const DualElement& o) {
  LocalElement t = body_ * o.tangent_ + tangent_ * o.body_;
  body_ *= o.body_;
  tangent_ = t;
  return *this;
}

DualElement& DualElement::operator/=(const DualElement& o) { return *this *= o.inverse(); }

std::string DualElement::to_string() const {
  return "(" + body_.to_string() + ") + eps*(" + tangent_.to_string() + ")";
}

DualElement operator+(DualElement a, const DualElement& b) { return a += b; }
DualElement operator-(DualElement a, const DualElement& b) { return a -= b; }
DualElement operator*(DualElement a, const DualElement& b) { return a *= b; }
DualElement operator/(DualElement a, const DualElement& b) { return a /= b; }

std::complex<double> psi0(const LocalElement& x) {
  if (x.is_exact_zero()) return 1.0;
  if (x.absolute_precision() < 0)
    throw PrecisionExhausted("fractional digits of " + x.to_string() + " unknown");
  if (x.is_zero() || x.valuation() >= 0) return 1.0;
  const int k = -x.valuation();
  const std::int64_t m = x.field().modulus(k);
  const std::int64_t t = reduce(x.unit_part(), m);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m);
  return std::polar(1.0, angle);
}

std::complex<double> AdditiveCharacter::operator()(const LocalElement& x) const {
  if (x.prime() != prime) throw std::invalid_argument("character prime mismatch");
  return psi0(x);
}

}  // namespace heckelab
