#include "heckelab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "heckelab/errors.hpp"
#include "heckelab/parallel.hpp"

namespace heckelab {

Tridiagonal Tridiagonal::from(const OperatorMatrix& A) {
  Tridiagonal T;
  T.diag = A.diag;
  for (int i = 0; i + 1 < A.size(); ++i) T.off.push_back(A.off(i));
  T.radius = 2 * std::sqrt(static_cast<double>(A.q));
  return T;
}

Tridiagonal Tridiagonal::lemma_shape(int n, double a, double b, double c) {
  Tridiagonal T;
  T.diag.assign(static_cast<std::size_t>(n), 0.0);
  T.diag[0] = c;
  T.off.assign(static_cast<std::size_t>(std::max(0, n - 1)), a);
  if (n >= 2) T.off[0] = b;
  T.radius = 2 * std::abs(a);
  return T;
}

LemmaFlags check_lemma_hypotheses(double a, double b, double c) {
  constexpr double eps = 1e-12;
  const double A = std::abs(a), B = std::abs(b), C = std::abs(c);
  LemmaFlags f;
  f.sum_bound = B + C <= 2 * A + eps;
  f.edge_bound = B <= A + eps || (c == 0.0 && B <= std::sqrt(2.0) * A + eps);
  return f;
}

LemmaFlags check_lemma_hypotheses(const OperatorMatrix& A) {
  const double a = std::sqrt(static_cast<double>(A.q));
  const int n = A.size();
  if (A.corner_at_end || (n >= 2 && A.off_sq.back() == A.q + 1)) {
    const double b = n >= 2 ? A.off(n - 2) : 0.0;
    return check_lemma_hypotheses(a, b, A.diag.back());
  }
  return check_lemma_hypotheses(a, n >= 2 ? A.off(0) : 0.0, A.diag.front());
}

int sturm_count_below(const Tridiagonal& T, double x) {
  const int n = T.size();
  double scale = 1;
  for (double d : T.diag) scale = std::max(scale, std::abs(d));
  for (double e : T.off) scale = std::max(scale, std::abs(e));
  const double pivmin = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon() * scale * scale;
  int count = 0;
  double d = 1;
  for (int i = 0; i < n; ++i) {
    const double e2 = i == 0 ? 0.0 : T.off[static_cast<std::size_t>(i - 1)] * T.off[static_cast<std::size_t>(i - 1)];
    d = T.diag[static_cast<std::size_t>(i)] - x - (i == 0 ? 0.0 : e2 / d);
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0) ++count;
  }
  return count;
}

SpectrumReport eigenvalues_tridiagonal(const Tridiagonal& T) {
  const int n = T.size();
  if (static_cast<int>(T.off.size()) != std::max(0, n - 1)) throw std::invalid_argument("off-diagonal has the wrong length");
  SpectrumReport r;
  r.radius = T.radius;
  if (n == 0) return r;

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < n; ++i) {
    double rad = 0;
    if (i > 0) rad += std::abs(T.off[static_cast<std::size_t>(i - 1)]);
    if (i + 1 < n) rad += std::abs(T.off[static_cast<std::size_t>(i)]);
    lo = std::min(lo, T.diag[static_cast<std::size_t>(i)] - rad);
    hi = std::max(hi, T.diag[static_cast<std::size_t>(i)] + rad);
  }
  const double width = std::max(hi - lo, 1.0);
  lo -= 1e-9 * width;
  hi += 1e-9 * width;
  const double tol = 1e-12 * (T.radius > 0 ? T.radius : width);

  r.eigenvalues.assign(static_cast<std::size_t>(n), 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t k) {
    double a = lo, b = hi;
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count_below(T, mid) > static_cast<int>(k))
        b = mid;
      else
        a = mid;
    }
    r.eigenvalues[k] = 0.5 * (a + b);
  });

  r.sturm_count = sturm_count_below(T, hi) - sturm_count_below(T, lo);
  r.min_gap = std::numeric_limits<double>::infinity();
  for (int i = 1; i < n; ++i) r.min_gap = std::min(r.min_gap, r.eigenvalues[static_cast<std::size_t>(i)] - r.eigenvalues[static_cast<std::size_t>(i - 1)]);
  const double top = std::max(std::abs(r.eigenvalues.front()), std::abs(r.eigenvalues.back()));
  r.bound_margin = T.radius - top;
  return r;
}

SpectrumReport eigenvalues_tridiagonal(const OperatorMatrix& A) {
  for (auto s : A.off_sq)
    if (s < 0) throw NonSymmetric("negative off-diagonal square has no real symmetric form");
  SpectrumReport r = eigenvalues_tridiagonal(Tridiagonal::from(A));
  r.hypothesis_flags = check_lemma_hypotheses(A);
  return r;
}

SpectrumReport eigenvalues_tridiagonal(const std::vector<double>& diag, const std::vector<double>& lower,
                                       const std::vector<double>& upper, double radius) {
  if (lower.size() != upper.size()) throw NonSymmetric("sub- and super-diagonal lengths differ");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] != upper[i]) throw NonSymmetric("entry " + std::to_string(i) + " breaks symmetry");
  Tridiagonal T{diag, lower, radius};
  return eigenvalues_tridiagonal(T);
}

bool verify_bound_and_simplicity(const SpectrumReport& report) {
  if (report.eigenvalues.empty()) return false;
  const double sqrt_q = report.radius / 2;
  return report.bound_margin >= -1e-9 && report.min_gap > 1e-8 * sqrt_q;
}

double arcsine_cdf(double x) {
  if (x <= -1) return 0;
  if (x >= 1) return 1;
  return 0.5 + std::asin(x) / std::numbers::pi;
}

double arcsine_ks_distance(const SpectrumReport& report) {
  const auto& ev = report.eigenvalues;
  const double n = static_cast<double>(ev.size());
  double D = 0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double F = arcsine_cdf(ev[i] / report.radius);
    D = std::max({D, F - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - F});
  }
  return D;
}

double chebyshev_u(int k, double x) {
  if (k < 0) return 0;
  double prev = 1, cur = 2 * x;
  if (k == 0) return prev;
  for (int j = 2; j <= k; ++j) {
    const double next = 2 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChebyshevVector chebyshev_eigenvector(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  ChebyshevVector out;
  out.lambda = std::cos(k * std::numbers::pi / (n + 1));
  out.v.resize(static_cast<std::size_t>(n));
  double prev = 0, cur = 1;
  for (int j = 0; j < n; ++j) {
    out.v[static_cast<std::size_t>(j)] = cur;
    out.norm_sq += cur * cur;
    const double next = 2 * out.lambda * cur - prev;
    prev = cur;
    cur = next;
  }
  out.closed_form_norm_sq = (n + 1) / (2 * (1 - out.lambda * out.lambda));
  return out;
}

std::vector<Family> families(std::int64_t q, int n, bool with_non_integral) {
  if (n < 1) throw std::invalid_argument("family dimension must be positive");
  std::vector<Family> out = {
      {"pure", RepSpec::nilpotent(q, n - 1)},
      {"split-conductor", RepSpec::split(q, n, 1)},
      {"split-chi+1", RepSpec::split(q, n - 1, 0, 1.0)},
      {"split-chi-1", RepSpec::split(q, n - 1, 0, -1.0)},
      {"nonsplit-odd+1", RepSpec::nonsplit(q, 2 * n - 1, 0, 1)},
      {"nonsplit-odd-1", RepSpec::nonsplit(q, 2 * n - 1, 0, -1)},
      {"nonsplit-even", RepSpec::nonsplit(q, 2 * (n - 1), 0)},
      {"nonsplit-conductor", RepSpec::nonsplit(q, 2 * n, 1)},
  };
  if (with_non_integral) out.push_back({"split-unitary", RepSpec::split(q, n - 1, 0, std::polar(1.0, 0.7))});
  return out;
}

}  // namespace heckelab
