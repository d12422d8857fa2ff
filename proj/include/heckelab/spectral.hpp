#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heckelab/invariant_operators.hpp"

namespace heckelab {

// Real symmetric tridiagonal matrix. `radius` is the bound the spectrum is
// measured against (2 sqrt q for operator matrices).
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
  double radius = 0;

  int size() const { return static_cast<int>(diag.size()); }
  static Tridiagonal from(const OperatorMatrix& A);
  // a on the off-diagonal, b first, c_n the (0,0) entry
  static Tridiagonal lemma_shape(int n, double a, double b, double c);
};

struct LemmaFlags {
  bool sum_bound = false;    // |b| + |c_n| <= 2|a|
  bool edge_bound = false;   // |b| <= |a|, or c_n = 0 and |b| <= sqrt 2 |a|
  bool holds() const { return sum_bound && edge_bound; }
};

LemmaFlags check_lemma_hypotheses(double a, double b, double c);
// Reads (a, b, c_n) off a matrix from build_matrix; the nonsplit shape is
// mirrored so that b and the corner sit at the start.
LemmaFlags check_lemma_hypotheses(const OperatorMatrix& A);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending
  double min_gap = 0;               // +inf for n = 1
  double bound_margin = 0;          // radius - max |lambda|
  double radius = 0;
  LemmaFlags hypothesis_flags;
  int sturm_count = 0;              // eigenvalues counted inside the Gershgorin interval
};

// Number of eigenvalues strictly below x.
int sturm_count_below(const Tridiagonal& T, double x);

// Sturm bisection, each eigenvalue to absolute tolerance 1e-12 * radius,
// parallel over eigenvalue index.
SpectrumReport eigenvalues_tridiagonal(const Tridiagonal& T);
SpectrumReport eigenvalues_tridiagonal(const OperatorMatrix& A);
// General tridiagonal input; throws NonSymmetric unless lower == upper.
SpectrumReport eigenvalues_tridiagonal(const std::vector<double>& diag, const std::vector<double>& lower,
                                       const std::vector<double>& upper, double radius);

bool verify_bound_and_simplicity(const SpectrumReport& report);

double arcsine_cdf(double x);
double arcsine_ks_distance(const SpectrumReport& report);

double chebyshev_u(int k, double x);

struct ChebyshevVector {
  double lambda = 0;
  std::vector<double> v;
  double norm_sq = 0;
  double closed_form_norm_sq = 0;  // (n+1) / (2 (1 - lambda^2))
};

// Eigenvector (U_0(l), ..., U_{n-1}(l)) of the a = 1/2 matrix at l = cos(k pi / (n+1)).
ChebyshevVector chebyshev_eigenvector(int n, int k);

// Shipped families of a given dimension n: name and spec.
struct Family {
  std::string name;
  RepSpec spec;
};

// All families of dimension n at integer q >= 2. The split family with
// chi_pi = exp(0.7 i) has no integer form and is left out unless asked for.
std::vector<Family> families(std::int64_t q, int n, bool with_non_integral = false);

}  // namespace heckelab
