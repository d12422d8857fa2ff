#include "heckelab/invariant_operators.hpp"

#include <climits>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "heckelab/errors.hpp"
#include "heckelab/parallel.hpp"

namespace heckelab {

namespace {

constexpr double kUnitTol = 1e-12;

int val(const LocalElement& x) { return x.is_zero() ? LocalElement::kInfinite : x.valuation(); }

LocalElement P(const LocalField& f, int k, std::int64_t unit = 1) { return LocalElement::uniformizer_power(f, k, unit); }

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

bool is_sign(std::complex<double> z) { return z.imag() == 0.0 && (z.real() == 1.0 || z.real() == -1.0); }

}  // namespace

std::string to_string(RepCase c) {
  switch (c) {
    case RepCase::Split:
      return "split";
    case RepCase::Nonsplit:
      return "nonsplit";
    case RepCase::Nilpotent:
      return "nilpotent";
  }
  return "?";
}

RepSpec RepSpec::split(std::int64_t q, int v_c, int conductor, std::complex<double> chi_pi, std::int64_t unit) {
  RepSpec s;
  s.kind = RepCase::Split;
  s.q = q;
  s.v = v_c;
  s.conductor = conductor;
  s.chi_pi = chi_pi;
  s.unit = unit;
  s.validate();
  return s;
}

RepSpec RepSpec::nonsplit(std::int64_t q, int v_d, int conductor, int corner_sign) {
  RepSpec s;
  s.kind = RepCase::Nonsplit;
  s.q = q;
  s.v = v_d;
  s.conductor = conductor;
  s.corner_sign = corner_sign;
  s.validate();
  return s;
}

RepSpec RepSpec::nilpotent(std::int64_t q, int depth) {
  RepSpec s;
  s.kind = RepCase::Nilpotent;
  s.q = q;
  s.conductor = depth;
  s.validate();
  return s;
}

RepSpec RepSpec::nilpotent_trivial(std::int64_t q) {
  RepSpec s;
  s.kind = RepCase::Nilpotent;
  s.q = q;
  s.infinite = true;
  s.validate();
  return s;
}

RepSpec RepSpec::special(std::int64_t q, std::int64_t c_unit, std::complex<double> chi_pi) {
  return split(q, 0, 0, chi_pi, c_unit);
}

bool RepSpec::integral() const {
  if (kind == RepCase::Split && conductor == 0) return is_sign(chi_pi);
  return true;
}

void RepSpec::validate() const {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (v < 0 || conductor < 0) throw std::invalid_argument("valuations and conductors are non-negative");
  if (corner_sign != 1 && corner_sign != -1) throw std::invalid_argument("corner_sign must be +1 or -1");
  if (std::abs(std::abs(chi_pi) - 1.0) > kUnitTol) throw std::invalid_argument("chi_pi must have absolute value 1");
  if (kind == RepCase::Split && mod(unit, q) == 0) throw std::invalid_argument("c must be a unit");
}

std::string RepSpec::to_string() const {
  std::ostringstream os;
  os << heckelab::to_string(kind) << "(q=" << q;
  switch (kind) {
    case RepCase::Split:
      os << ", v_c=" << v << ", conductor=" << conductor << ", chi_pi=" << chi_pi.real() << (chi_pi.imag() < 0 ? "" : "+")
         << chi_pi.imag() << "i";
      break;
    case RepCase::Nonsplit:
      os << ", v_d=" << v << ", conductor=" << conductor << ", corner_sign=" << corner_sign;
      break;
    case RepCase::Nilpotent:
      if (infinite)
        os << ", psi=1";
      else
        os << ", depth=" << conductor;
      break;
  }
  os << ")";
  return os.str();
}

int dimension(const RepSpec& spec) {
  switch (spec.kind) {
    case RepCase::Split:
      return spec.conductor > spec.v ? 0 : spec.v + 1 - spec.conductor;
    case RepCase::Nonsplit: {
      const int R = spec.v / 2;
      return spec.conductor > R ? 0 : R + 1 - spec.conductor;
    }
    case RepCase::Nilpotent:
      return spec.infinite ? kInfiniteDimension : spec.conductor + 1;
  }
  return 0;
}

double OperatorMatrix::off(int i) const { return std::sqrt(static_cast<double>(off_sq[static_cast<std::size_t>(i)])); }

Eigen::MatrixXd OperatorMatrix::dense() const {
  const int n = size();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) A(i, i) = diag[static_cast<std::size_t>(i)];
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = A(i + 1, i) = off(i);
  return A;
}

Eigen::MatrixXd OperatorMatrix::integer_similar() const {
  const int n = size();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) A(i, i) = diag[static_cast<std::size_t>(i)];
  for (int i = 0; i + 1 < n; ++i) {
    A(i, i + 1) = 1.0;
    A(i + 1, i) = static_cast<double>(off_sq[static_cast<std::size_t>(i)]);
  }
  return A;
}

std::vector<std::int64_t> OperatorMatrix::integer_diag() const {
  if (!integral_diag) throw NonIntegerSpec("diagonal is not integral");
  std::vector<std::int64_t> out;
  for (double d : diag) {
    const double r = std::round(d);
    if (std::abs(d - r) > 1e-12) throw NonIntegerSpec("diagonal entry " + std::to_string(d) + " is not an integer");
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

OperatorMatrix build_matrix(const RepSpec& spec, int truncation) {
  spec.validate();
  int n = dimension(spec);
  if (n == kInfiniteDimension) {
    if (truncation <= 0) throw ZeroSpace("infinite-dimensional space needs a positive truncation");
    n = truncation;
  }
  if (n == 0) throw ZeroSpace("no K_eps-invariants for " + spec.to_string());
  OperatorMatrix A;
  A.q = spec.q;
  A.diag.assign(static_cast<std::size_t>(n), 0.0);
  A.off_sq.assign(static_cast<std::size_t>(n - 1), spec.q);
  A.integral_diag = spec.integral();
  switch (spec.kind) {
    case RepCase::Split:
      if (spec.conductor == 0) {
        A.diag[0] = (spec.chi_pi + 1.0 / spec.chi_pi).real();
        if (n >= 2) A.off_sq[0] = spec.q - 1;
      }
      break;
    case RepCase::Nonsplit:
      if (spec.conductor == 0 && spec.v % 2 == 1) {
        A.diag.back() = spec.corner_sign;
        A.corner_at_end = true;
      } else if (spec.conductor == 0 && n >= 2) {
        A.off_sq.back() = spec.q + 1;
      }
      break;
    case RepCase::Nilpotent:
      break;
  }
  return A;
}

std::complex<double> special_rep_scalar(std::int64_t p, std::int64_t x, std::int64_t c, std::complex<double> chi_pi) {
  const std::int64_t k = mod(mod(2 * c, p) * mod(x, p), p);
  const std::complex<double> psi = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p));
  return psi * chi_pi + 1.0 / chi_pi;
}

std::complex<double> special_rep_action(std::int64_t p, std::int64_t x, std::int64_t c, std::complex<double> chi_pi) {
  const std::int64_t k = mod(mod(c, p) * mod(x, p), p);
  const std::complex<double> psi = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p));
  return psi * chi_pi + std::conj(psi) / chi_pi;
}

// ActionOracle

ActionOracle::ActionOracle(const RepSpec& spec, int truncation)
    : spec_(spec), field_(spec.q, LocalField::max_precision(spec.q)) {
  spec_.validate();
  switch (spec_.kind) {
    case RepCase::Split:
      fiber_ = FiberData::split(field_, spec_.v, mod(spec_.unit, spec_.q));
      orbit_count_ = spec_.v + 1;
      break;
    case RepCase::Nonsplit:
      if (spec_.conductor > 0)
        throw UnsupportedCharacter("no character construction for the nonsplit torus with positive conductor");
      fiber_ = FiberData::nonsplit(field_, spec_.v);
      orbit_count_ = spec_.v / 2 + 1;
      break;
    case RepCase::Nilpotent:
      fiber_ = FiberData::nilpotent(field_);
      if (spec_.infinite) {
        if (truncation <= 0) throw ZeroSpace("psi = 1 needs a positive truncation");
        orbit_count_ = truncation;
      } else {
        orbit_count_ = spec_.conductor + 3;
      }
      break;
  }

  if (spec_.kind == RepCase::Split && spec_.conductor > 0) {
    const std::int64_t p = spec_.q;
    std::int64_t M = 1;
    for (int i = 0; i < spec_.conductor; ++i) M *= p;
    if (M > 2'000'000) throw UnsupportedCharacter("conductor too large for the discrete log table");
    const std::int64_t phi = M / p * (p - 1);
    dlog_.assign(static_cast<std::size_t>(M), -1);
    for (std::int64_t g = 2; g < M; ++g) {
      if (g % p == 0) continue;
      std::fill(dlog_.begin(), dlog_.end(), -1);
      std::int64_t e = 1, k = 0;
      while (dlog_[static_cast<std::size_t>(e)] < 0) {
        dlog_[static_cast<std::size_t>(e)] = k++;
        e = e * g % M;
      }
      if (k == phi) break;
    }
    dlog_modulus_ = M;
  }

  for (int r = 0; r < orbit_count_; ++r)
    if (stabilizer_acts_trivially(r)) basis_.push_back(r);
}

std::complex<double> ActionOracle::character(const GMatrix& z) const {
  switch (spec_.kind) {
    case RepCase::Split: {
      const LocalElement a = z(0, 0) / z(1, 1);
      const int v = a.valuation();
      std::complex<double> out = std::pow(spec_.chi_pi, v);
      if (spec_.conductor > 0) {
        if (a.relative_precision() < spec_.conductor) throw PrecisionExhausted("unit part of " + a.to_string());
        const std::int64_t k = dlog_[static_cast<std::size_t>(mod(a.unit_part(), dlog_modulus_))];
        const std::int64_t phi = dlog_modulus_ / spec_.q * (spec_.q - 1);
        out *= std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(phi));
      }
      return out;
    }
    case RepCase::Nonsplit: {
      if (spec_.v % 2 == 0) return 1.0;
      const int vt = val(z(0, 0)), vs = val(z(1, 0));
      const long e = std::min<long>(vt == LocalElement::kInfinite ? LONG_MAX : 2L * vt,
                                    vs == LocalElement::kInfinite ? LONG_MAX : 2L * vs + spec_.v);
      return (e % 2 != 0) ? static_cast<double>(spec_.corner_sign) : 1.0;
    }
    case RepCase::Nilpotent: {
      if (spec_.infinite) return 1.0;
      const LocalElement b = z(0, 1) / z(1, 1);
      return psi0(b.shifted(spec_.conductor));
    }
  }
  return 1.0;
}

std::complex<double> ActionOracle::normalization(int r) const {
  const double q = static_cast<double>(spec_.q);
  switch (spec_.kind) {
    case RepCase::Split:
      if (r == 0) return 1.0;
      return std::pow(q, -(r - 1) / 2.0) / std::sqrt(q - 1) * std::pow(spec_.chi_pi, -r);
    case RepCase::Nonsplit:
      if (spec_.v % 2 == 0 && r == spec_.v / 2) return std::sqrt(q + 1) * std::pow(q, (spec_.v / 2 - 1) / 2.0);
      return std::pow(q, r / 2.0);
    case RepCase::Nilpotent:
      return std::pow(q, r / 2.0);
  }
  return 1.0;
}

std::complex<double> ActionOracle::basis_value(int r, const ProjMatrix& g) const {
  const Decomposition dec = semidirect_decompose(g);
  if (!springer_membership(dec.h, fiber_.m)) return 0.0;
  const CanonicalPoint cp = orbit_canonicalize(fiber_, iwasawa(dec.h));
  if (cp.rep_index != r) return 0.0;
  return psi0(trace_pairing(fiber_.m, dec.X)) * character(cp.z) * normalization(r);
}

std::complex<double> ActionOracle::u_summand(int s, int r, std::int64_t x, std::int64_t y0, std::int64_t y1) const {
  const ProjMatrix g = mat::embed(fiber_.representative(r)) * mat::u(DualElement::from_int(field_, y0, y1)) * mat::g_x(field_, x);
  return basis_value(s, g);
}

std::complex<double> ActionOracle::w_summand(int s, int r, std::int64_t x, std::int64_t z) const {
  const ProjMatrix g = mat::embed(fiber_.representative(r)) * mat::w_eps(field_) *
                       mat::u(DualElement::from_int(field_, 0, z)) * mat::g_x(field_, x);
  return basis_value(s, g);
}

std::complex<double> ActionOracle::apply(int s, int r, std::int64_t x) const {
  const std::int64_t q = spec_.q;
  std::complex<double> sum = 0;
  for (std::int64_t y0 = 0; y0 < q; ++y0)
    for (std::int64_t y1 = 0; y1 < q; ++y1) sum += u_summand(s, r, x, y0, y1);
  for (std::int64_t z = 0; z < q; ++z) sum += w_summand(s, r, x, z);
  return sum / static_cast<double>(q);
}

Eigen::MatrixXcd ActionOracle::matrix(std::int64_t x) const {
  const int n = size();
  Eigen::MatrixXcd M(n, n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t j) {
    const int s = basis_[j];
    for (int i = 0; i < n; ++i) {
      const int r = basis_[static_cast<std::size_t>(i)];
      M(i, static_cast<int>(j)) = apply(s, r, x) / normalization(r);
    }
  });
  return M;
}

Eigen::MatrixXcd ActionOracle::double_coset_matrix(const DoubleCoset& coset) const {
  if (!(coset.representative()(0, 0).field() == field_)) throw std::invalid_argument("coset built over a different field");
  const int n = size();
  Eigen::MatrixXcd M(n, n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t j) {
    const int s = basis_[j];
    for (int i = 0; i < n; ++i) {
      const int r = basis_[static_cast<std::size_t>(i)];
      const ProjMatrix h = mat::embed(fiber_.representative(r));
      std::complex<double> sum = 0;
      for (const ProjMatrix& k : coset.left_reps()) sum += basis_value(s, h * k * coset.representative());
      M(i, static_cast<int>(j)) = sum / normalization(r);
    }
  });
  return M;
}

Eigen::MatrixXcd ActionOracle::hecke_matrix(CosetCatalog& catalog, const HeckeElement& h) const {
  const int n = size();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [name, coeff] : h.terms) M += double_coset_matrix(catalog.get(name)) * static_cast<double>(coeff);
  return M;
}

std::vector<GMatrix> ActionOracle::stabilizer_candidates(int r) const {
  const LocalField& f = field_;
  const std::int64_t p = spec_.q;
  std::vector<GMatrix> out;
  switch (spec_.kind) {
    case RepCase::Split: {
      const int J = std::max(r, spec_.conductor) + 1;
      for (std::int64_t u = 1; u < p; ++u)
        for (int j = 1; j <= J; ++j)
          for (std::int64_t k = 0; k < p; ++k) out.push_back(mat::t(LocalElement::from_int(f, u) + P(f, j) * LocalElement::from_int(f, k)));
      out.push_back(mat::t(P(f, 1)));
      break;
    }
    case RepCase::Nonsplit: {
      const LocalElement& d = fiber_.param;
      const int R = spec_.v / 2;
      for (int j = -R - 2; j <= 2; ++j)
        for (std::int64_t k = 1; k < p; ++k) out.push_back({LocalElement::from_int(f, 1), d * P(f, j, k), P(f, j, k), LocalElement::from_int(f, 1)});
      for (std::int64_t t = 1; t < p; ++t)
        for (std::int64_t s = 1; s < p; ++s) {
          const LocalElement S = LocalElement::from_int(f, s);
          out.push_back({LocalElement::from_int(f, t), d * S, S, LocalElement::from_int(f, t)});
        }
      out.push_back({LocalElement(f), d, LocalElement::from_int(f, 1), LocalElement(f)});
      break;
    }
    case RepCase::Nilpotent:
      for (int j = -r - 2; j <= 2; ++j)
        for (std::int64_t k = 1; k < p; ++k) out.push_back(mat::u(P(f, j, k)));
      break;
  }
  return out;
}

bool ActionOracle::stabilizer_acts_trivially(int r) const {
  const GMatrix rep = fiber_.representative(r);
  const GMatrix rep_inv = rep.inverse();
  for (const GMatrix& z : stabilizer_candidates(r)) {
    if (!in_K(rep_inv * z * rep)) continue;
    if (std::abs(character(z) - 1.0) > 1e-9) return false;
  }
  return true;
}

Eigen::MatrixXcd action_oracle(const RepSpec& spec, std::int64_t x, int truncation) {
  return ActionOracle(spec, truncation).matrix(x);
}

namespace {

Eigen::MatrixXcd evaluate(const TPolynomial& P, const std::vector<Eigen::MatrixXcd>& T) {
  const auto n = T.front().rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [m, c] : P.terms()) {
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n) * c.to_complex();
    for (std::size_t x = 0; x < m.size(); ++x)
      for (int e = 0; e < m[x]; ++e) term = term * T[x];
    out += term;
  }
  return out;
}

Eigen::MatrixXcd evaluate(const LaurentPolynomial& L, const Eigen::MatrixXcd& A) {
  const auto n = A.rows();
  if (L.min_degree() < 0) throw SpecMismatch("negative powers need an invertible argument");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 0; k <= L.max_degree(); ++k) {
    out += power * L.coefficient(k).to_complex();
    power = power * A;
  }
  return out;
}

double coefficient_scale(const TPolynomial& P, double norm) {
  double s = 1.0;
  for (const auto& [m, c] : P.terms()) {
    int deg = 0;
    for (int e : m) deg += e;
    s += std::abs(c.to_complex()) * std::pow(std::max(norm, 1.0), deg);
  }
  return s;
}

}  // namespace

bool consistency_with_representations(const TPolynomial& P, const RepSpec& spec, int truncation) {
  if (P.prime() != spec.q) throw SpecMismatch("polynomial over F_" + std::to_string(P.prime()) + " but representation has q=" + std::to_string(spec.q));
  const int dim = dimension(spec);
  if (dim == 0) throw SpecMismatch("representation " + spec.to_string() + " has no K_eps-invariants");
  const std::int64_t p = spec.q;
  const bool oracle_ok = is_odd_prime(p) && !(spec.kind == RepCase::Nonsplit && spec.conductor > 0);

  std::vector<Eigen::MatrixXcd> T;
  if (oracle_ok) {
    const ActionOracle oracle(spec, truncation);
    for (std::int64_t x = 0; x < p; ++x) T.push_back(oracle.matrix(x));
  } else {
    if (spec.is_special()) throw SpecMismatch("special representation needs the oracle");
    const Eigen::MatrixXcd A = build_matrix(spec, truncation).dense().cast<std::complex<double>>();
    T.assign(static_cast<std::size_t>(p), A);
  }
  const Eigen::MatrixXcd lhs = evaluate(P, T);
  double norm = 0;
  for (const auto& A : T) norm = std::max(norm, A.cwiseAbs().rowwise().sum().maxCoeff());
  const double tol = 1e-9 * coefficient_scale(P, norm);

  if (spec.is_special()) {
    const ResidueCharacter psi{p, mod(spec.unit, p)};
    const std::complex<double> rhs = beta_psi_balanced(P, psi).evaluate(spec.chi_pi);
    return std::abs(lhs(0, 0) - rhs) <= tol;
  }
  const Eigen::MatrixXcd rhs = evaluate(beta_1(P), T.front());
  return (lhs - rhs).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace heckelab
