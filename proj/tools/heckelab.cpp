#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/invariant_operators.hpp"
#include "heckelab/measure.hpp"
#include "heckelab/parallel.hpp"
#include "heckelab/suites.hpp"

using namespace heckelab;

namespace {

constexpr int kOk = 0;
constexpr int kAssertion = 1;
constexpr int kUsage = 2;

const char* kCsvHelp = R"(CSV columns, in order:
  structure          p,x,y,n_1,n_w,n_wu_eps,coef_gxgy,coef_gxy,coef_hxy,match
  commutativity      p,x,y,commutes
  cosets             p,x,y,probes,classified,gxy_hxy_equal,h_xy_in_gxy_coset
  operators          case,params,n,max_entry_deviation,dim_formula,dim_oracle,pass
  x_independence     case,params,n,max_x_deviation,pass
  special            p,c,chi_pi,x,oracle,stated,beta_psi_at_chi,measured_formula,stated_dev,beta_dev
  spectrum           family,q,n,index,eigenvalue,normalized
  spectrum_summary   family,q,n,max_abs_eigenvalue,bound,min_gap,ks,hypotheses,sturm_count
  bound              q,family,n,max_abs_eigenvalue,bound,min_gap,hypotheses,pass
  weil               q,family,n,char_poly_degree,real_roots,roots_in_range,certificate
  measure            q,k,n,moment_exact,catalan_times_q_power,truncated_measure_moment,match
  convergence        q,k,n,truncated,limit,error
  algebra            p,check,psi,x,pass
  springer           p,check,fiber,count,pass
Families for spectrum: pure, split-conductor, split-chi+1, split-chi-1,
  nonsplit-odd+1, nonsplit-odd-1, nonsplit-even, nonsplit-conductor, split-unitary.
Exit codes: 0 ok, 1 assertion failure, 2 usage error. HECKELAB_THREADS caps threads.)";

struct Config {
  std::int64_t prime = 3;
  int precision = 8;
  std::optional<int> n;
  int vc = 4;
  int vd = 5;
  int conductor = 2;
  std::optional<int> chi_pi;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::string rep_case = "all";
  std::string family = "pure";
  int max_k = 20;
};

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool want_csv(const Config& c) { return c.format == "csv" || c.format == "both"; }
bool want_svg(const Config& c) { return c.format == "svg" || c.format == "both"; }

void write_file(const Config& c, const std::string& name, const std::string& body) {
  if (c.out.empty()) return;
  std::filesystem::create_directories(c.out);
  const auto path = std::filesystem::path(c.out) / name;
  std::ofstream os(path, std::ios::binary);
  os << body;
  std::printf("wrote %s\n", path.string().c_str());
}

// Prints the suite, writes its CSV, and returns whether it passed.
bool report(const Config& c, const SuiteResult& r, const std::string& file, bool print_table = true) {
  if (print_table && !r.table.rows.empty()) std::fputs(r.table.csv().c_str(), stdout);
  std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
  if (want_csv(c)) write_file(c, file + ".csv", r.table.csv());
  return r.pass;
}

int finish(bool ok) { return ok ? kOk : kAssertion; }

int cmd_structure(const Config& c) {
  bool ok = report(c, structure_suite(c.prime, c.precision), "structure");
  ok = report(c, commutativity_suite(c.prime, c.precision), "commutativity") && ok;
  ok = report(c, coset_suite(c.prime, c.precision), "cosets") && ok;
  return finish(ok);
}

OperatorSweep sweep_of(const Config& c) {
  OperatorSweep s;
  s.q = c.prime;
  s.max_vc = c.vc;
  s.max_vd = c.vd;
  s.max_conductor = c.conductor;
  s.max_depth = c.vc;
  if (c.chi_pi) s.chis = {static_cast<double>(*c.chi_pi)};
  s.split = c.rep_case == "all" || c.rep_case == "split";
  s.nonsplit = c.rep_case == "all" || c.rep_case == "nonsplit";
  s.nilpotent = c.rep_case == "all" || c.rep_case == "nilpotent";
  return s;
}

int cmd_operators(const Config& c) {
  if (c.rep_case == "special") return finish(report(c, special_rep_suite({c.prime}), "special"));
  const auto s = sweep_of(c);
  bool ok = report(c, operators_suite(s), "operators");
  ok = report(c, x_independence_suite(s), "x_independence") && ok;
  return finish(ok);
}

int cmd_spectrum(const Config& c) {
  const int n = c.n.value_or(200);
  const auto fs = family_spectrum(c.prime, n, c.family);
  const auto& rep = fs.report;
  const bool ok = verify_bound_and_simplicity(rep) && rep.sturm_count == n;
  Table eig{{"family", "q", "n", "index", "eigenvalue", "normalized"}, {}};
  for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i)
    eig.add({c.family, std::to_string(c.prime), std::to_string(n), std::to_string(i), fmt_num(rep.eigenvalues[i]),
             fmt_num(rep.eigenvalues[i] / rep.radius)});
  Table summary{{"family", "q", "n", "max_abs_eigenvalue", "bound", "min_gap", "ks", "hypotheses", "sturm_count"}, {}};
  summary.add({c.family, std::to_string(c.prime), std::to_string(n), fmt_num(rep.radius - rep.bound_margin), fmt_num(rep.radius),
               std::isinf(rep.min_gap) ? "inf" : fmt_num(rep.min_gap), fmt_num(fs.ks), rep.hypothesis_flags.holds() ? "yes" : "no",
               std::to_string(rep.sturm_count)});
  std::fputs(summary.csv().c_str(), stdout);
  std::printf("KS distance to arcsine: %s\n", fmt_num(fs.ks).c_str());
  std::printf("%s spectrum %s q=%lld n=%d: real, simple, |lambda| <= 2 sqrt q\n", ok ? "PASS" : "FAIL", c.family.c_str(),
              static_cast<long long>(c.prime), n);
  if (want_csv(c)) {
    write_file(c, "spectrum.csv", eig.csv());
    write_file(c, "spectrum_summary.csv", summary.csv());
  }
  if (want_svg(c)) {
    const std::string title = c.family + ", q=" + std::to_string(c.prime) + ", n=" + std::to_string(n) + ", KS=" + fmt_num(fs.ks);
    write_file(c, "spectrum.svg", arcsine_histogram_svg(rep, title));
  }
  return finish(ok);
}

int cmd_weil(const Config& c) {
  std::vector<int> ns;
  for (int i = 1; i <= c.n.value_or(50); ++i) ns.push_back(i);
  return finish(report(c, weil_suite({c.prime}, ns), "weil"));
}

int cmd_measure(const Config& c) {
  bool ok = report(c, measure_suite({c.prime}, c.max_k, c.n.value_or(4096), c.seed), "measure");
  Table conv{{"q", "k", "n", "truncated", "limit", "error"}, {}};
  for (int k = 0; k <= std::min(c.max_k, 12); k += 2) {
    std::vector<double> poly(static_cast<std::size_t>(k + 1), 0.0);
    poly.back() = 1;
    for (const auto& row : weak_convergence_report({1, 2, 4, 16, 256, c.n.value_or(4096)}, poly, c.prime))
      conv.add({std::to_string(c.prime), std::to_string(k), std::to_string(row.n), fmt_num(row.truncated), fmt_num(row.limit), fmt_num(row.error)});
  }
  std::fputs(conv.csv().c_str(), stdout);
  if (want_csv(c)) write_file(c, "convergence.csv", conv.csv());
  return finish(ok);
}

int cmd_algebra(const Config& c) {
  bool ok = report(c, algebra_suite({c.prime}, c.seed), "algebra");
  ok = report(c, springer_suite({c.prime}, c.seed), "springer") && ok;
  return finish(ok);
}

int cmd_all(const Config& c) {
  bool ok = cmd_structure(c) == kOk;
  ok = cmd_operators(c) == kOk && ok;
  std::vector<int> ns;
  for (int i = 1; i <= c.n.value_or(200); i += (i < 30 ? 1 : 10)) ns.push_back(i);
  ok = report(c, spectral_bound_suite({c.prime}, ns), "bound", false) && ok;
  ok = cmd_spectrum(c) == kOk && ok;
  Config w = c;
  w.n = std::min(c.n.value_or(50), 50);
  ok = cmd_weil(w) == kOk && ok;
  Config m = c;
  m.n.reset();
  ok = cmd_measure(m) == kOk && ok;
  ok = cmd_algebra(c) == kOk && ok;
  std::printf("%s all\n", ok ? "PASS" : "FAIL");
  return finish(ok);
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Hecke operators T_x for PGL2 over dual numbers: verification suites"};
  app.footer(kCsvHelp);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prime", c.prime, "odd residue characteristic p");
  app.add_option("--precision", c.precision, "p-adic digits carried (>= 6)");
  app.add_option("--n", c.n, "matrix size (spectrum), max size (weil), atoms (measure)");
  app.add_option("--vc", c.vc, "max v(c) for split sweeps, max depth for nilpotent")->check(CLI::NonNegativeNumber);
  app.add_option("--vd", c.vd, "max v(d) for nonsplit sweeps")->check(CLI::NonNegativeNumber);
  app.add_option("--conductor", c.conductor, "max conductor for split sweeps")->check(CLI::NonNegativeNumber);
  app.add_option("--chi-pi", c.chi_pi, "fix chi(p) to 1 or -1")->check(CLI::IsMember({1, -1}));
  app.add_option("--out", c.out, "output directory for CSV/SVG");
  app.add_option("--format", c.format, "csv, svg or both")->check(CLI::IsMember({"csv", "svg", "both"}));
  app.add_option("--seed", c.seed, "seed for random sampling");
  app.add_option("--case", c.rep_case, "split, nonsplit, nilpotent, special or all")
      ->check(CLI::IsMember({"split", "nonsplit", "nilpotent", "special", "all"}));
  app.add_option("--family", c.family, "spectrum family");
  app.add_option("--max-k", c.max_k, "largest moment checked")->check(CLI::Range(0, 60));

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Config&);
  };
  const std::vector<Sub> subs = {
      {"structure", "structure constants, commutativity and double cosets", cmd_structure},
      {"operators", "closed-form T_0 against the brute-force oracle", cmd_operators},
      {"spectrum", "eigenvalues of one family, KS distance, SVG histogram", cmd_spectrum},
      {"weil", "exact characteristic polynomials and Weil certificates", cmd_weil},
      {"measure", "moments, truncated spectral measures, convergence", cmd_measure},
      {"algebra", "algebra morphisms and Springer fiber checks", cmd_algebra},
      {"all", "every suite", cmd_all},
  };
  std::vector<CLI::App*> handles;
  for (const auto& s : subs) handles.push_back(app.add_subcommand(s.name, s.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (!is_prime(c.prime) || c.prime == 2) {
    std::fprintf(stderr, "error: --prime must be an odd prime, got %lld\n", static_cast<long long>(c.prime));
    return kUsage;
  }
  if (c.precision < 6) {
    std::fprintf(stderr, "error: --precision must be at least 6, got %d\n", c.precision);
    return kUsage;
  }
  if (c.n && *c.n < 1) {
    std::fprintf(stderr, "error: --n must be positive\n");
    return kUsage;
  }

  std::printf("seed %llu\nthreads %u\n", static_cast<unsigned long long>(c.seed), thread_count());
  try {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (handles[i]->parsed()) return subs[i].run(c);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const heckelab::Error& e) {
    std::fprintf(stderr, "assertion failure: %s\n", e.what());
    return kAssertion;
  }
  return kUsage;
}
