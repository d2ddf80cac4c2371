#include "disclab/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>

#include <CLI11.hpp>

#include "disclab/disc_oracle.hpp"
#include "disclab/dual.hpp"
#include "disclab/instances.hpp"
#include "disclab/io.hpp"
#include "disclab/linalg.hpp"
#include "disclab/rng.hpp"
#include "disclab/rounding.hpp"
#include "disclab/solver.hpp"

namespace disclab {

namespace {

// phase tags for deriving per-stage seeds from the master seed
constexpr std::uint64_t kSolvePhase = 1;
constexpr std::uint64_t kCertPhase = 2;
constexpr std::uint64_t kRoundPhase = 3;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string signs_to_string(const std::vector<int>& signs) {
  std::string out;
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (j) out += ' ';
    out += (signs[j] > 0) ? "+1" : "-1";
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct GenOpts {
  std::string family;
  std::size_t rows = 10, cols = 10;
  std::size_t vertices = 10, edges = 10, degree = 3;
  std::size_t points = 10;
  std::uint64_t seed = 0;
  bool scaled = false;
  std::string out;
};

int do_gen(const GenOpts& o) {
  Matrix a;
  if (o.family == "tight") {
    a = gen_tight();
  } else if (o.family == "gaussian") {
    a = gen_gaussian_unit(o.rows, o.cols, o.seed);
  } else if (o.family == "beck-fiala") {
    a = gen_beck_fiala(o.vertices, o.edges, o.degree, o.seed, o.scaled);
  } else if (o.family == "ap") {
    a = gen_arithmetic_progressions(o.points, o.scaled);
  } else {
    std::cerr << "unknown family '" << o.family
              << "' (expected tight | gaussian | beck-fiala | ap)\n";
    return 1;
  }
  write_matrix(a, o.out);
  std::cout << "wrote " << o.out << " (" << a.rows() << " x " << a.cols() << ")\n";
  return 0;
}

struct SolveOpts {
  std::string in;
  std::size_t trials = 8;
  std::size_t iters = 5000;
  std::uint64_t seed = 0;
  std::string report;
  std::string out_coloring;
};

int do_solve(const SolveOpts& o) {
  const Matrix a = read_matrix(o.in);
  SolverConfig cfg;
  cfg.trials = o.trials;
  cfg.max_iters = o.iters;
  cfg.seed = o.seed;
  const PrimalSolution sol = solve_vecdisc(a, cfg);

  std::cout << "value = " << fmt17(sol.value) << "\n"
            << "sqrt_value = " << fmt17(std::sqrt(sol.value)) << "\n"
            << "converged = " << (sol.converged ? "true" : "false") << "\n"
            << "iterations = " << sol.iterations << "\n";
  if (!o.out_coloring.empty()) write_matrix(sol.coloring.vectors, o.out_coloring);
  if (!o.report.empty()) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["instance"] = {{"generator", "file:" + o.in},
                     {"rows", a.rows()},
                     {"cols", a.cols()},
                     {"max_col_norm", a.max_col_norm()}};
    j["seed"] = o.seed;
    j["primal"] = {{"value", sol.value},
                   {"sqrt_value", std::sqrt(sol.value)},
                   {"converged", sol.converged},
                   {"iterations", sol.iterations}};
    write_text(o.report, j.dump(2) + "\n");
  }
  return 0;
}

struct BruteOpts {
  std::string in;
  std::size_t limit = 26;
};

int do_brute(const BruteOpts& o) {
  const Matrix a = read_matrix(o.in);
  const SignColoring best = disc_brute(a, o.limit);
  std::cout << "value = " << fmt17(best.value) << "\n"
            << "signs = " << signs_to_string(best.signs) << "\n";
  return 0;
}

struct CertSearchOpts {
  std::string in;
  std::size_t iters = 50;
  std::string out;
};

int do_cert_search(const CertSearchOpts& o) {
  const Matrix a = read_matrix(o.in);
  const DualCertificate cert = search_certificate(a, o.iters);
  const double wsum = std::accumulate(cert.w.begin(), cert.w.end(), 0.0);
  std::cout << "D = " << fmt17(cert.D) << "\n"
            << "sum_w = " << fmt17(wsum) << "\n";
  if (!o.out.empty()) write_certificate(cert, o.out);
  return 0;
}

struct CertVerifyOpts {
  std::string in;
  std::string cert;
  double tol = 1e-8;
};

int do_cert_verify(const CertVerifyOpts& o) {
  const Matrix a = read_matrix(o.in);
  const DualCertificate cert = read_certificate(o.cert);
  if (verify_certificate(a, cert, o.tol)) {
    std::cout << "valid, D = " << fmt17(cert.D) << "\n";
    return 0;
  }
  const double bottom = min_eigenvalue(weighted_gram(a, cert.p).minus_diag(cert.w)).first;
  const double wsum = std::accumulate(cert.w.begin(), cert.w.end(), 0.0);
  std::cout << "invalid: min eigenvalue = " << fmt17(bottom) << ", sum_w = " << fmt17(wsum)
            << ", D^2 = " << fmt17(cert.D * cert.D) << "\n";
  return 2;
}

struct CertPathOpts {
  std::string in;
  std::string cert;
};

int do_witness(const CertPathOpts& o) {
  const Matrix a = read_matrix(o.in);
  const DualCertificate cert = read_certificate(o.cert);
  const double wsum = std::accumulate(cert.w.begin(), cert.w.end(), 0.0);
  if (!(wsum >= 1.0 + 1e-6)) {
    std::cerr << "sum_w = " << fmt17(wsum)
              << " does not exceed 1; a witness is only guaranteed above 1\n";
    return 1;
  }
  const Witness wit = extract_witness(a, cert.p, cert.w);
  std::cout << "z =";
  for (double v : wit.z) std::cout << ' ' << fmt17(v);
  std::cout << "\nlhs = " << fmt17(wit.lhs) << "\nrhs = " << fmt17(wit.rhs)
            << "\nlhs < rhs: containment refuted\n";
  return 0;
}

int do_trace(const CertPathOpts& o) {
  const Matrix a = read_matrix(o.in);
  const DualCertificate cert = read_certificate(o.cert);
  check_dual_shapes(a, cert.p, cert.w);
  const double bottom = min_eigenvalue(weighted_gram(a, cert.p).minus_diag(cert.w)).first;
  if (bottom < -1e-8) {
    std::cout << "containment fails: min eigenvalue = " << fmt17(bottom)
              << "; run witness instead\n";
    return 2;
  }
  const ProofTrace trace = theorem_trace(a, cert.p, cert.w);
  std::printf("%4s  %-22s  %-22s  %-22s  %-8s %-8s %-8s\n", "k", "section_det", "p_prefix",
              "w_prefix", "hadamard", "section", "prefix");
  for (const ProofTraceRow& row : trace.rows) {
    std::printf("%4zu  %-22.15g  %-22.15g  %-22.15g  %-8s %-8s %-8s\n", row.k, row.section_det,
                row.p_prefix, row.w_prefix, row.hadamard_ok ? "ok" : "FAIL",
                row.section_ok ? "ok" : "FAIL", row.prefix_ok ? "ok" : "FAIL");
  }
  std::cout << "sum_w = " << fmt17(trace.w_sum) << " <= top-p sum = " << fmt17(trace.p_top_sum)
            << " <= 1\n"
            << "all_ok = " << (trace.all_ok ? "true" : "false") << "\n";
  return trace.all_ok ? 0 : 2;
}

struct RoundOpts {
  std::string in;
  std::string coloring;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
};

int do_round(const RoundOpts& o) {
  const Matrix a = read_matrix(o.in);
  VectorColoring u;
  u.vectors = read_matrix(o.coloring);
  const SignColoring rounded = round_hyperplane(a, u, o.trials, o.seed);
  std::cout << "value = " << fmt17(rounded.value) << "\n"
            << "signs = " << signs_to_string(rounded.signs) << "\n";
  return 0;
}

struct ReportOpts {
  std::string in;
  std::uint64_t seed = 0;
  std::size_t trials = 8;
  std::size_t iters = 5000;
  std::size_t cert_iters = 50;
  std::size_t brute_limit = 20;
  std::size_t round_trials = 200;
  std::string out;
  bool no_timings = false;
  bool table = false;
};

int do_report(const ReportOpts& o) {
  const Matrix a = read_matrix(o.in);
  SolveReport rep;
  rep.generator = "file:" + o.in;
  rep.rows = a.rows();
  rep.cols = a.cols();
  rep.max_col_norm = a.max_col_norm();
  rep.master_seed = o.seed;

  auto start = std::chrono::steady_clock::now();
  SolverConfig cfg;
  cfg.trials = o.trials;
  cfg.max_iters = o.iters;
  cfg.seed = derive_seed(o.seed, kSolvePhase);
  const PrimalSolution sol = solve_vecdisc(a, cfg);
  rep.timings["solve"] = seconds_since(start);
  rep.primal_value = sol.value;
  rep.primal_sqrt = std::sqrt(sol.value);
  rep.converged = sol.converged;
  rep.iterations = sol.iterations;

  start = std::chrono::steady_clock::now();
  const DualCertificate cert = search_certificate(a, o.cert_iters, derive_seed(o.seed, kCertPhase));
  rep.timings["cert_search"] = seconds_since(start);
  rep.dual_d = cert.D;
  rep.dual_wsum = std::accumulate(cert.w.begin(), cert.w.end(), 0.0);
  rep.gap = rep.primal_sqrt - rep.dual_d;

  std::optional<SignColoring> brute;
  if (o.brute_limit > 0 && a.cols() <= o.brute_limit) {
    start = std::chrono::steady_clock::now();
    brute = disc_brute(a, o.brute_limit);
    rep.timings["brute"] = seconds_since(start);
    rep.brute_value = brute->value;
  }

  start = std::chrono::steady_clock::now();
  const SignColoring rounded =
      round_hyperplane(a, sol.coloring, o.round_trials, derive_seed(o.seed, kRoundPhase));
  rep.timings["round"] = seconds_since(start);
  rep.rounded_value = rounded.value;

  // independent checker pass: nothing is emitted unless every reported value
  // re-verifies from its primary inputs
  start = std::chrono::steady_clock::now();
  const double residual = feasibility_residual(sol.coloring);
  if (residual > 2e-9) {
    std::cerr << "checker: coloring infeasible, residual = " << fmt17(residual) << "\n";
    return 2;
  }
  const std::vector<double> rv = row_values(a, sol.coloring);
  const double recomputed = *std::max_element(rv.begin(), rv.end());
  if (recomputed != sol.value) {
    std::cerr << "checker: primal value mismatch: " << fmt17(recomputed) << " vs "
              << fmt17(sol.value) << "\n";
    return 2;
  }
  rep.dual_min_eig = min_eigenvalue(weighted_gram(a, cert.p).minus_diag(cert.w)).first;
  if (!verify_certificate(a, cert, 1e-8)) {
    std::cerr << "checker: certificate failed verification, min eigenvalue = "
              << fmt17(rep.dual_min_eig) << "\n";
    return 2;
  }
  if (rep.gap < -1e-6) {
    std::cerr << "checker: duality gap " << fmt17(rep.gap) << " below -1e-6\n";
    return 2;
  }
  if (brute) {
    if (disc_value(a, brute->signs) != brute->value) {
      std::cerr << "checker: brute value does not match its coloring\n";
      return 2;
    }
    if (rep.primal_sqrt > brute->value + 1e-6) {
      std::cerr << "checker: relaxation above brute-force optimum: " << fmt17(rep.primal_sqrt)
                << " > " << fmt17(brute->value) << "\n";
      return 2;
    }
  }
  if (disc_value(a, rounded.signs) != rounded.value) {
    std::cerr << "checker: rounded value does not match its coloring\n";
    return 2;
  }
  rep.timings["check"] = seconds_since(start);

  const std::string body = report_to_json(rep, !o.no_timings).dump(2) + "\n";
  if (!o.out.empty()) {
    write_text(o.out, body);
    if (o.table) std::cout << report_to_table(rep, !o.no_timings);
  } else if (o.table) {
    std::cout << report_to_table(rep, !o.no_timings);
  } else {
    std::cout << body;
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"discrepancy / vector discrepancy toolkit"};
  app.require_subcommand(1);

  GenOpts gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance matrix");
  gen->add_option("family", gen_opts.family, "tight | gaussian | beck-fiala | ap")->required();
  gen->add_option("--rows", gen_opts.rows, "gaussian: row count");
  gen->add_option("--cols", gen_opts.cols, "gaussian: column count");
  gen->add_option("--vertices", gen_opts.vertices, "beck-fiala: vertex (column) count");
  gen->add_option("--edges", gen_opts.edges, "beck-fiala: edge (row) count");
  gen->add_option("--t", gen_opts.degree, "beck-fiala: max vertex degree");
  gen->add_option("--points", gen_opts.points, "ap: ground-set size N");
  gen->add_option("--seed", gen_opts.seed, "generator seed");
  gen->add_flag("--scaled", gen_opts.scaled, "scale columns into the unit ball");
  gen->add_option("--out", gen_opts.out, "output matrix path")->required();

  SolveOpts solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "upper-bound vecdisc by projected gradient");
  solve->add_option("--in", solve_opts.in, "matrix path")->required();
  solve->add_option("--trials", solve_opts.trials, "independent restarts");
  solve->add_option("--iters", solve_opts.iters, "max iterations per trial");
  solve->add_option("--seed", solve_opts.seed, "solver seed");
  solve->add_option("--report", solve_opts.report, "write a primal report JSON here");
  solve->add_option("--out-coloring", solve_opts.out_coloring,
                    "write the vector coloring (matrix of rows u_j) here");

  BruteOpts brute_opts;
  CLI::App* brute = app.add_subcommand("brute", "exact disc by exhaustive enumeration");
  brute->add_option("--in", brute_opts.in, "matrix path")->required();
  brute->add_option("--limit", brute_opts.limit, "refuse instances with more columns");

  CertSearchOpts cs_opts;
  CLI::App* cert_search = app.add_subcommand("cert-search", "search for a dual certificate");
  cert_search->add_option("--in", cs_opts.in, "matrix path")->required();
  cert_search->add_option("--iters", cs_opts.iters, "outer ascent rounds");
  cert_search->add_option("--out", cs_opts.out, "output certificate path");

  CertVerifyOpts cv_opts;
  CLI::App* cert_verify = app.add_subcommand("cert-verify", "verify a dual certificate");
  cert_verify->add_option("--in", cv_opts.in, "matrix path")->required();
  cert_verify->add_option("--cert", cv_opts.cert, "certificate path")->required();
  cert_verify->add_option("--tol", cv_opts.tol, "PSD / sum tolerance");

  CertPathOpts wit_opts;
  CLI::App* witness = app.add_subcommand("witness", "refute an overweight certificate");
  witness->add_option("--in", wit_opts.in, "matrix path")->required();
  witness->add_option("--cert", wit_opts.cert, "certificate path")->required();

  CertPathOpts trace_opts;
  CLI::App* trace = app.add_subcommand("trace", "walk the determinant chain numerically");
  trace->add_option("--in", trace_opts.in, "matrix path")->required();
  trace->add_option("--cert", trace_opts.cert, "certificate path")->required();

  RoundOpts round_opts;
  CLI::App* round = app.add_subcommand("round", "hyperplane-round a vector coloring");
  round->add_option("--in", round_opts.in, "matrix path")->required();
  round->add_option("--coloring", round_opts.coloring, "vector coloring path")->required();
  round->add_option("--trials", round_opts.trials, "rounding trials");
  round->add_option("--seed", round_opts.seed, "rounding seed");

  ReportOpts report_opts;
  CLI::App* report = app.add_subcommand("report", "full pipeline with checker pass");
  report->add_option("--in", report_opts.in, "matrix path")->required();
  report->add_option("--seed", report_opts.seed, "master seed");
  report->add_option("--trials", report_opts.trials, "solver restarts");
  report->add_option("--iters", report_opts.iters, "solver max iterations");
  report->add_option("--cert-iters", report_opts.cert_iters, "certificate search rounds");
  report->add_option("--brute-limit", report_opts.brute_limit,
                     "brute-force when n <= this (0 disables)");
  report->add_option("--round-trials", report_opts.round_trials, "hyperplane rounding trials");
  report->add_option("--out", report_opts.out, "report JSON path (default stdout)");
  report->add_flag("--no-timings", report_opts.no_timings, "omit wall-clock timings");
  report->add_flag("--table", report_opts.table, "print aligned columns instead of JSON");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string prog = "disclab";
  argv.push_back(prog.data());
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) return do_gen(gen_opts);
    if (*solve) return do_solve(solve_opts);
    if (*brute) return do_brute(brute_opts);
    if (*cert_search) return do_cert_search(cs_opts);
    if (*cert_verify) return do_cert_verify(cv_opts);
    if (*witness) return do_witness(wit_opts);
    if (*trace) return do_trace(trace_opts);
    if (*round) return do_round(round_opts);
    if (*report) return do_report(report_opts);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace disclab
