#include "heckelab/weil.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// sign of p(n/d) for d > 0, by homogeneous Horner in integers
int sign_homogeneous(const IntPolynomial& p, const BigInt& n, const BigInt& d) {
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  BigInt acc = c.back(), dp = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dp *= d;
    acc = acc * n + c[static_cast<std::size_t>(i)] * dp;
  }
  return sign(acc);
}

int count_in(const std::vector<IntPolynomial>& chain, const Rational& a, const Rational& b) {
  return sign_changes(chain, a) - sign_changes(chain, b);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }
IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

IntPolynomial IntPolynomial::from_roots(const std::vector<std::int64_t>& roots) {
  IntPolynomial p = constant(1);
  for (auto r : roots) p = p * IntPolynomial({BigInt(-r), 1});
  return p;
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& a : c_) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(a));
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long long>(i));
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return static_cast<double>(acc);
}

int IntPolynomial::sign_at(const Rational& x) const {
  return sign_homogeneous(*this, boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

int IntPolynomial::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  const int s = sign(c_.back());
  return positive || degree() % 2 == 0 ? s : -s;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (i < c_.size() ? c_[i] : 0) + (i < o.c_.size() ? o.c_[i] : 0);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out(c_);
  for (auto& a : out) a = -a;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& k) const {
  std::vector<BigInt> out(c_);
  for (auto& a : out) a *= k;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const BigInt m = boost::multiprecision::abs(a);
    if (first)
      os << (a < 0 ? "-" : "");
    else
      os << (a < 0 ? " - " : " + ");
    first = false;
    if (m != 1 || k == 0) os << m;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int steps = 0;
  while (static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const BigInt lr = r.back();
    for (auto& v : r) v *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(dr - db + i)] -= lr * bc[static_cast<std::size_t>(i)];
    while (!r.empty() && r.back() == 0) r.pop_back();
    ++steps;
  }
  IntPolynomial out(std::move(r));
  if (lb < 0 && steps % 2 == 1) out = -out;
  const BigInt g = out.content();
  if (g > 1) {
    std::vector<BigInt> c = out.coeffs();
    for (auto& v : c) v /= g;
    out = IntPolynomial(std::move(c));
  }
  return out;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    if (a.is_zero()) return {};
    throw std::domain_error("divisor has larger degree");
  }
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const auto& bc = b.coeffs();
  for (int k = a.degree() - db; k >= 0; --k) {
    const BigInt& top = r[static_cast<std::size_t>(k + db)];
    if (top % b.leading() != 0) throw std::domain_error("inexact polynomial division");
    const BigInt t = top / b.leading();
    quot[static_cast<std::size_t>(k)] = t;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= t * bc[static_cast<std::size_t>(i)];
  }
  for (const auto& v : r)
    if (v != 0) throw std::domain_error("inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPolynomial squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  const IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return exact_quotient(p, g);
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    IntPolynomial r = -pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<IntPolynomial>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_changes_at_infinity(const std::vector<IntPolynomial>& chain, bool positive) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at_infinity(positive);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (b <= a) return 0;
  return count_in(sturm_chain(squarefree(p)), a, b);
}

int sturm_count_real(const IntPolynomial& p) {
  const auto chain = sturm_chain(squarefree(p));
  return sign_changes_at_infinity(chain, false) - sign_changes_at_infinity(chain, true);
}

std::vector<double> real_roots(const IntPolynomial& p, double tol) {
  const IntPolynomial s = squarefree(p).primitive();
  std::vector<double> out;
  if (s.degree() <= 0) return out;
  const auto chain = sturm_chain(s);
  BigInt M = 0;
  for (const auto& c : s.coeffs()) M = std::max(M, BigInt(boost::multiprecision::abs(c)));
  const Rational bound = Rational(M) / Rational(boost::multiprecision::abs(s.leading())) + 1;
  const Rational rtol(static_cast<long long>(tol * 1e15), 1000000000000000LL);

  std::vector<std::pair<Rational, Rational>> stack = {{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int n = count_in(chain, a, b);
    if (n == 0) continue;
    if (n > 1) {
      const Rational mid = (a + b) / 2;
      stack.push_back({mid, b});
      stack.push_back({a, mid});
      continue;
    }
    // one root in (a, b]; move both ends off roots, then bisect on sign
    while (s.sign_at(a) == 0 || s.sign_at(b) == 0) {
      if (s.sign_at(b) == 0) {
        a = b;
        break;
      }
      const Rational mid = (a + b) / 2;
      if (count_in(chain, a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    if (a == b) {
      out.push_back(a.convert_to<double>());
      continue;
    }
    const int sa = s.sign_at(a);
    while (b - a > rtol) {
      const Rational mid = (a + b) / 2;
      const int sm = s.sign_at(mid);
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == sa)
        a = mid;
      else
        b = mid;
    }
    out.push_back(((a + b) / 2).convert_to<double>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial char_poly_exact(const OperatorMatrix& A) {
  const auto d = A.integer_diag();
  IntPolynomial prev = IntPolynomial::constant(1), cur = IntPolynomial::constant(1);
  for (int k = 0; k < A.size(); ++k) {
    IntPolynomial next = IntPolynomial({BigInt(-d[static_cast<std::size_t>(k)]), 1}) * cur;
    if (k >= 1) next = next - prev * BigInt(A.off_sq[static_cast<std::size_t>(k - 1)]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial even_odd_resultant(const IntPolynomial& p) {
  std::vector<BigInt> a, b;
  for (int k = 0; k <= p.degree(); ++k) (k % 2 == 0 ? a : b).push_back(p.coeff(k));
  const IntPolynomial A(a), B(b);
  return A * A - IntPolynomial::x() * B * B;
}

std::string WeilCertificate::to_string() const {
  std::ostringstream os;
  os << (pass() ? "PASS" : "FAIL") << " degree=" << degree << " squarefree=" << squarefree_degree << " real=" << real_roots
     << " r_degree=" << r_squarefree_degree << " r_in_range=" << r_roots_in_range;
  return os.str();
}

WeilCertificate certify_weil(const IntPolynomial& p, std::int64_t q) {
  if (!p.monic()) throw NotMonic("certify_weil needs a monic polynomial, got " + p.to_string());
  if (q < 1) throw std::invalid_argument("q must be positive");
  WeilCertificate c;
  c.degree = p.degree();
  const IntPolynomial s = squarefree(p);
  c.squarefree_degree = s.degree();
  c.real_roots = sturm_count_real(s);
  c.totally_real = c.real_roots == c.squarefree_degree;

  const IntPolynomial r = squarefree(even_odd_resultant(p));
  c.r_squarefree_degree = r.degree();
  const auto chain = sturm_chain(r);
  c.r_roots_in_range = count_in(chain, Rational(0), Rational(4 * q)) + (r.sign_at(Rational(0)) == 0 ? 1 : 0);
  c.bounded = c.r_roots_in_range == c.r_squarefree_degree;
  return c;
}

}  // namespace heckelab
