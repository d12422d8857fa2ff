#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heckelab/spectral.hpp"

namespace heckelab {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  // header row, comma separated, LF line endings
  std::string csv() const;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string detail;
  Table table;

  void fail(const std::string& why);
};

std::string fmt_num(double v);
std::string fmt_complex(std::complex<double> z);

// Criteria 1-3: structure constants, commutativity, double cosets.
SuiteResult structure_suite(std::int64_t p, int precision = 8);
SuiteResult commutativity_suite(std::int64_t p, int precision = 8);
SuiteResult coset_suite(std::int64_t p, int precision = 8);

struct OperatorSweep {
  std::int64_t q = 3;
  int max_vc = 4;
  int max_conductor = 2;
  int max_vd = 5;
  int max_depth = 4;
  std::vector<std::complex<double>> chis = {1.0, -1.0, {0.0, 1.0}};
  bool split = true, nonsplit = true, nilpotent = true;
};

// Criterion 4: closed forms against the oracle, with dimension formulas.
SuiteResult operators_suite(const OperatorSweep& sweep);
// Criterion 5: x-independence when v(det m) >= 1, and the special representation.
SuiteResult x_independence_suite(const OperatorSweep& sweep);
SuiteResult special_rep_suite(const std::vector<std::int64_t>& primes);

// Criteria 6-8.
SuiteResult spectral_bound_suite(const std::vector<std::int64_t>& qs, const std::vector<int>& ns);
SuiteResult arcsine_suite(std::int64_t q, const std::vector<int>& ns, double ks_limit = 0.02);
SuiteResult chebyshev_suite(const std::vector<int>& ns);

// Eigenvalues of one family at size n plus the KS distance.
struct FamilySpectrum {
  Family family;
  SpectrumReport report;
  double ks = 0;
};
FamilySpectrum family_spectrum(std::int64_t q, int n, const std::string& family);

// Criterion 9.
SuiteResult weil_suite(const std::vector<std::int64_t>& qs, const std::vector<int>& ns);

// Criterion 10.
SuiteResult measure_suite(const std::vector<std::int64_t>& qs, int max_k, int n_atoms, std::uint64_t seed);

// Criterion 11.
SuiteResult algebra_suite(const std::vector<std::int64_t>& primes, std::uint64_t seed);

// Criterion 12.
SuiteResult springer_suite(const std::vector<std::int64_t>& primes, std::uint64_t seed);

// Histogram of lambda / (2 sqrt q) on [-1, 1] with the arcsine density drawn over it.
std::string arcsine_histogram_svg(const SpectrumReport& report, const std::string& title, int bins = 40);

}  // namespace heckelab
