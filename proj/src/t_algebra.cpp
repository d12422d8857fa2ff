#include "heckelab/t_algebra.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

#include "heckelab/errors.hpp"

namespace heckelab {

Cyclotomic ResidueCharacter::value(std::int64_t x) const { return Cyclotomic::zeta_power(p, u * (x % p)); }

std::complex<double> ResidueCharacter::complex_value(std::int64_t x) const {
  const std::int64_t k = (((u * x) % p) + p) % p;
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p));
}

// LaurentPolynomial

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t p, int k, const Cyclotomic& c) {
  LaurentPolynomial r(p);
  r.add(k, c);
  return r;
}

void LaurentPolynomial::add(int k, const Cyclotomic& c) {
  if (c.prime() != p_) throw std::invalid_argument("coefficient field mismatch");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Cyclotomic LaurentPolynomial::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Cyclotomic(p_) : it->second;
}

bool LaurentPolynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

int LaurentPolynomial::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPolynomial::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r(p_);
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) r.add(i + j, a * b);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Cyclotomic& c) const {
  LaurentPolynomial r(p_);
  for (const auto& [k, a] : terms_) r.add(k, a * c);
  return r;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> s = 0;
  for (const auto& [k, c] : terms_) s += c.to_complex() * std::pow(z, k);
  return s;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k != 0) os << "*z^" << k;
  }
  return os.str();
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

// TPolynomial

TPolynomial TPolynomial::t(std::int64_t p, std::int64_t x) {
  TPolynomial r(p);
  Monomial m(static_cast<std::size_t>(p));
  m[static_cast<std::size_t>(((x % p) + p) % p)] = 1;
  r.add(m, Cyclotomic(p, 1));
  return r;
}

TPolynomial TPolynomial::constant(const Cyclotomic& c) {
  TPolynomial r(c.prime());
  r.add(Monomial(static_cast<std::size_t>(c.prime())), c);
  return r;
}

TPolynomial TPolynomial::sum_t(std::int64_t p) {
  TPolynomial r(p);
  for (std::int64_t x = 0; x < p; ++x) r += t(p, x);
  return r;
}

TPolynomial TPolynomial::random(std::int64_t p, int max_degree, int max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_degree), coef(-3, 3);
  std::uniform_int_distribution<std::int64_t> var(0, p - 1), zeta(0, p - 1);
  TPolynomial r(p);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(static_cast<std::size_t>(p));
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) ++m[static_cast<std::size_t>(var(rng))];
    r.add(m, Cyclotomic::zeta_power(p, zeta(rng)) * Rational(coef(rng)));
  }
  return r;
}

void TPolynomial::add(const Monomial& m, const Cyclotomic& c) {
  if (c.prime() != p_) throw std::invalid_argument("coefficient field mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int TPolynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

TPolynomial TPolynomial::operator*(const TPolynomial& o) const {
  TPolynomial r(p_);
  for (const auto& [m1, a] : terms_)
    for (const auto& [m2, b] : o.terms_) {
      Monomial m = m1;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
      r.add(m, a * b);
    }
  return r;
}

TPolynomial TPolynomial::operator*(const Cyclotomic& c) const {
  TPolynomial r(p_);
  for (const auto& [m, a] : terms_) r.add(m, a * c);
  return r;
}

std::string TPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t x = 0; x < m.size(); ++x)
      if (m[x] > 0) os << "*t" << x << (m[x] > 1 ? "^" + std::to_string(m[x]) : "");
  }
  return os.str();
}

TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }

namespace {

LaurentPolynomial substitute(const TPolynomial& P, const std::vector<LaurentPolynomial>& images) {
  const std::int64_t p = P.prime();
  LaurentPolynomial out(p);
  for (const auto& [m, c] : P.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(c);
    for (std::size_t x = 0; x < m.size(); ++x)
      for (int e = 0; e < m[x]; ++e) term = term * images[x];
    out += term;
  }
  return out;
}

}  // namespace

LaurentPolynomial beta_1(const TPolynomial& P) {
  const std::int64_t p = P.prime();
  std::vector<LaurentPolynomial> images(static_cast<std::size_t>(p), LaurentPolynomial::monomial(p, 1, Cyclotomic(p, 1)));
  return substitute(P, images);
}

LaurentPolynomial beta_psi(const TPolynomial& P, const ResidueCharacter& psi) {
  if (psi.trivial()) throw TrivialCharacter("beta_psi needs a nontrivial character");
  const std::int64_t p = P.prime();
  if (psi.p != p) throw std::invalid_argument("character and polynomial over different primes");
  std::vector<LaurentPolynomial> images;
  for (std::int64_t x = 0; x < p; ++x)
    images.push_back(LaurentPolynomial::monomial(p, -1, psi.value(x)) + LaurentPolynomial::monomial(p, 1, Cyclotomic(p, 1)));
  return substitute(P, images);
}

LaurentPolynomial beta_psi_balanced(const TPolynomial& P, const ResidueCharacter& psi) {
  if (psi.trivial()) throw TrivialCharacter("beta_psi_balanced needs a nontrivial character");
  const std::int64_t p = P.prime();
  if (psi.p != p) throw std::invalid_argument("character and polynomial over different primes");
  std::vector<LaurentPolynomial> images;
  for (std::int64_t x = 0; x < p; ++x)
    images.push_back(LaurentPolynomial::monomial(p, 1, psi.value(x)) + LaurentPolynomial::monomial(p, -1, psi.value(-x)));
  return substitute(P, images);
}

TPolynomial kernel_element(std::int64_t p, std::int64_t x) {
  return TPolynomial::sum_t(p) * (TPolynomial::t(p, 0) - TPolynomial::t(p, x));
}

SurjectivityWitness surjectivity_witness(const ResidueCharacter& psi) {
  if (psi.trivial()) throw TrivialCharacter("surjectivity witness needs a nontrivial character");
  const std::int64_t p = psi.p;
  SurjectivityWitness w;
  w.x = 1;
  while (psi.value(w.x) == Cyclotomic(p, 1)) ++w.x;
  // beta(t_0) = z^{-1} + z, beta(t_x) = a z^{-1} + z with a = psi(x) != 1
  const Cyclotomic a = psi.value(w.x);
  const Cyclotomic inv = (Cyclotomic(p, 1) - a).inverse();
  w.a0 = inv;
  w.ax = -inv;
  w.b0 = -(a * inv);
  w.bx = inv;
  const LaurentPolynomial t0 = beta_psi(TPolynomial::t(p, 0), psi);
  const LaurentPolynomial tx = beta_psi(TPolynomial::t(p, w.x), psi);
  const Cyclotomic one(p, 1);
  w.verified = t0 * w.a0 + tx * w.ax == LaurentPolynomial::monomial(p, -1, one) &&
               t0 * w.b0 + tx * w.bx == LaurentPolynomial::monomial(p, 1, one);
  return w;
}

CrtWitness crt_witness(const ResidueCharacter& psi1, const ResidueCharacter& psi2) {
  if (psi1.p != psi2.p) throw std::invalid_argument("characters over different primes");
  const std::int64_t p = psi1.p;
  if ((psi1.u - psi2.u) % p == 0) throw std::invalid_argument("crt witness needs distinct characters");
  auto beta = [](const TPolynomial& P, const ResidueCharacter& psi) {
    return psi.trivial() ? beta_1(P) : beta_psi(P, psi);
  };
  CrtWitness w;
  w.x = 1;
  while (psi1.value(w.x) == psi2.value(w.x)) ++w.x;
  const TPolynomial E = kernel_element(p, w.x);
  const LaurentPolynomial i1 = beta(E, psi1), i2 = beta(E, psi2);
  const Cyclotomic q(p, p);
  w.image1_constant = i1 == LaurentPolynomial(p) + LaurentPolynomial::constant(q * (Cyclotomic(p, 1) - psi1.value(w.x)));
  w.image2_constant = i2 == LaurentPolynomial(p) + LaurentPolynomial::constant(q * (Cyclotomic(p, 1) - psi2.value(w.x)));
  w.unit = i1.coefficient(0) - i2.coefficient(0);
  w.is_unit = !w.unit.is_zero() && w.unit * w.unit.inverse() == Cyclotomic(p, 1);
  return w;
}

}  // namespace heckelab
