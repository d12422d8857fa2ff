#include "heckelab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace heckelab {

double DiscreteMeasure::total_weight() const {
  double s = 0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

double DiscreteMeasure::integrate(const std::vector<double>& poly) const {
  double s = 0;
  for (const auto& a : atoms) {
    double v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * a.location + *it;
    s += a.weight * v;
  }
  return s;
}

double DiscreteMeasure::moment(int k) const {
  double s = 0;
  for (const auto& a : atoms) s += a.weight * std::pow(a.location, k);
  return s;
}

double DiscreteMeasure::max_location() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& a : atoms) m = std::max(m, a.location);
  return m;
}

DiscreteMeasure truncated_measure(int n, double a) {
  if (n < 1 || a <= 0) throw std::invalid_argument("truncated_measure needs n >= 1 and a > 0");
  DiscreteMeasure mu;
  mu.atoms.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double c = std::cos(std::numbers::pi * k / (n + 1));
    const double s = std::sin(std::numbers::pi * k / (n + 1));
    mu.atoms.push_back({2 * a * c, 2 * s * s / (n + 1)});
  }
  return mu;
}

double direct_expectation(int n, double a, const std::vector<double>& poly) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0), next(v.size());
  v[0] = 1;
  double s = 0;
  for (std::size_t j = 0; j < poly.size(); ++j) {
    s += poly[j] * v[0];
    for (int i = 0; i < n; ++i) {
      const double left = i > 0 ? v[static_cast<std::size_t>(i - 1)] : 0.0;
      const double right = i + 1 < n ? v[static_cast<std::size_t>(i + 1)] : 0.0;
      next[static_cast<std::size_t>(i)] = a * (left + right);
    }
    std::swap(v, next);
  }
  return s;
}

BigInt catalan(int j) {
  BigInt c = 1;
  for (int i = 0; i < j; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

BigInt moment_exact(int n, int k, std::int64_t q) {
  if (n < 1 || k < 0) throw std::invalid_argument("moment_exact needs n >= 1 and k >= 0");
  if (k % 2 == 1) return 0;
  const int height = std::min(n, k / 2 + 1);
  std::vector<BigInt> w(static_cast<std::size_t>(height), 0), next(w.size());
  w[0] = 1;
  for (int step = 0; step < k; ++step) {
    for (int h = 0; h < height; ++h) {
      next[static_cast<std::size_t>(h)] = (h > 0 ? w[static_cast<std::size_t>(h - 1)] : BigInt(0)) +
                                         (h + 1 < height ? w[static_cast<std::size_t>(h + 1)] : BigInt(0));
    }
    std::swap(w, next);
  }
  return w[0] * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k / 2));
}

Rational semicircle_moment(int k) {
  if (k < 0) throw std::invalid_argument("negative moment");
  if (k % 2 == 1) return 0;
  return Rational(catalan(k / 2));
}

double semicircle_moment(int k, double a) { return semicircle_moment(k).convert_to<double>() * std::pow(a, k); }

double semicircle_moment_quadrature(int k, double a) {
  auto f = [&](double t) {
    const double s = std::sin(t);
    return 2 * s * s * std::pow(2 * a * std::cos(t), k) / std::numbers::pi;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi, 15, 1e-14);
}

std::vector<ConvergenceRow> weak_convergence_report(const std::vector<int>& n_list, const std::vector<double>& poly, std::int64_t q) {
  const double a = std::sqrt(static_cast<double>(q));
  double limit = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) limit += poly[k] * semicircle_moment(static_cast<int>(k), a);
  std::vector<ConvergenceRow> rows;
  for (int n : n_list) {
    ConvergenceRow r;
    r.n = n;
    r.truncated = truncated_measure(n, a).integrate(poly);
    r.limit = limit;
    r.error = std::abs(r.truncated - limit);
    rows.push_back(r);
  }
  return rows;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt krylov_determinant(int n) {
  if (n < 1) throw std::invalid_argument("krylov_determinant needs n >= 1");
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<BigInt>> K(N, std::vector<BigInt>(N, 0));
  std::vector<BigInt> v(N, 0), next(N);
  v[0] = 1;
  for (std::size_t col = 0; col < N; ++col) {
    for (std::size_t i = 0; i < N; ++i) K[i][col] = v[i];
    for (std::size_t i = 0; i < N; ++i) next[i] = (i > 0 ? v[i - 1] : BigInt(0)) + (i + 1 < N ? v[i + 1] : BigInt(0));
    std::swap(v, next);
  }
  return bareiss_determinant(std::move(K));
}

}  // namespace heckelab
