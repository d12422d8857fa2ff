#pragma once

#include <cstdint>
#include <vector>

#include "heckelab/numeric.hpp"

namespace heckelab {

struct Atom {
  double location = 0;
  double weight = 0;
};

struct DiscreteMeasure {
  std::vector<Atom> atoms;

  double total_weight() const;
  // f given by coefficients in increasing degree
  double integrate(const std::vector<double>& poly) const;
  double moment(int k) const;
  double max_location() const;
};

// Spectral measure of the n x n tridiagonal (0 diagonal, a off-diagonal) at e_0:
// atoms 2a cos(pi k/(n+1)) with weights 2 (1 - cos^2(pi k/(n+1))) / (n+1).
DiscreteMeasure truncated_measure(int n, double a);

// <f(T_n) e_0, e_0> by repeated tridiagonal products
double direct_expectation(int n, double a, const std::vector<double>& poly);

BigInt catalan(int j);

// <T_n^k e_0, e_0> for a = sqrt q, as an integer: the number of walks of length
// k from 0 to 0 on {0, ..., n-1} times q^{k/2}.
BigInt moment_exact(int n, int k, std::int64_t q);

// int x^k d(semicircle of scale a) = coefficient * a^k
Rational semicircle_moment(int k);
double semicircle_moment(int k, double a);
// Same integral by quadrature after x = 2a cos t.
double semicircle_moment_quadrature(int k, double a);

struct ConvergenceRow {
  int n = 0;
  double truncated = 0;
  double limit = 0;
  double error = 0;
};

std::vector<ConvergenceRow> weak_convergence_report(const std::vector<int>& n_list, const std::vector<double>& poly, std::int64_t q);

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);
// det [e_0, T e_0, ..., T^{n-1} e_0] for T with unit off-diagonal; nonzero iff
// e_0 is cyclic for T_n.
BigInt krylov_determinant(int n);

}  // namespace heckelab
