#include "primesums/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <thread>

#include "primesums/analysis.hpp"
#include "primesums/arith.hpp"
#include "primesums/errors.hpp"
#include "primesums/explicit_formula.hpp"
#include "primesums/expsum.hpp"
#include "primesums/report.hpp"
#include "primesums/special.hpp"
#include "primesums/zeros.hpp"

#ifndef PRIMESUMS_DATA_DIR
#define PRIMESUMS_DATA_DIR "data"
#endif

namespace primesums::cli {

namespace {

using Row = std::vector<std::string>;

QuadratureSpec quad_of(const RunConfig& c) {
  QuadratureSpec q;
  q.abs_tol = c.abs_tol;
  q.rel_tol = c.rel_tol;
  return q;
}

// Runs fn(0..count-1) on a pool of workers; results come back in index
// order and the lowest-index failure is rethrown.
template <class T>
std::vector<T> parallel_map(unsigned threads, std::size_t count,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

template <class V>
void require_grid(const V& grid, const char* name) {
  if (grid.empty()) throw ValidationError(std::string("the ") + name + " grid is empty");
}

void require_positive(const std::vector<std::uint64_t>& grid, const char* name) {
  require_grid(grid, name);
  for (auto v : grid)
    if (v == 0) throw ValidationError(std::string(name) + " values must be positive");
}

SieveTable make_sieve(const RunConfig& c, std::uint64_t required) {
  if (c.sieve_limit != 0 && c.sieve_limit < required)
    throw ValidationError("--sieve-limit " + std::to_string(c.sieve_limit) +
                          " is below the required " + std::to_string(required));
  return build_sieve(std::max<std::uint64_t>({required, c.sieve_limit, 2}));
}

ZeroTable load_table(const RunConfig& c) {
  return load_zeros(c.zeros_path.empty() ? default_zeros_path() : c.zeros_path);
}

void check_output_path(const std::string& path) {
  if (path.empty()) return;
  namespace fs = std::filesystem;
  const fs::path parent = fs::absolute(fs::path(path)).parent_path();
  if (!fs::is_directory(parent))
    throw IoError("output directory '" + parent.string() + "' does not exist");
}

CsvTable run_formula(const RunConfig& c) {
  require_positive(c.n_grid, "N");
  const std::uint64_t top = *std::max_element(c.n_grid.begin(), c.n_grid.end());
  const bool hl = c.command == "verify-hl";
  const ZeroTable zeros = load_table(c);
  const ZeroView view = truncate(zeros, c.height);
  const SieveTable sieve =
      make_sieve(c, required_sieve_limit(hl ? ProblemKind::HL : ProblemKind::GOLDBACH, top));
  const std::function<FormulaReport(std::size_t)> job = [&](std::size_t i) {
    const std::uint64_t N = c.n_grid[i];
    FormulaReport r;
    if (c.command == "verify-goldbach") r = goldbach_average(N, view, sieve);
    else if (c.command == "verify-cesaro") r = goldbach_cesaro(N, c.k, view, sieve, c.pair_height);
    else if (c.command == "verify-gy") r = goldston_yang(N, view, sieve);
    else r = hl_cesaro(N, c.k, view, sieve, c.bessel_ell_max);
    r.T = c.height;
    return r;
  };
  const auto reports = parallel_map(c.threads, c.n_grid.size(), job);
  return formula_table(reports);
}

CsvTable run_short_interval(const RunConfig& c) {
  require_positive(c.n_grid, "N");
  require_positive(c.h_grid, "H");
  const ProblemKind kind = parse_problem_kind(c.problem);
  std::uint64_t need = 2;
  for (auto N : c.n_grid)
    for (auto H : c.h_grid) need = std::max(need, required_sieve_limit(kind, N + H));
  const SieveTable sieve = make_sieve(c, need);
  const std::size_t nh = c.h_grid.size();
  const std::function<FormulaReport(std::size_t)> job = [&](std::size_t i) {
    return short_interval_report(kind, c.n_grid[i / nh], c.h_grid[i % nh], sieve);
  };
  return formula_table(parallel_map(c.threads, c.n_grid.size() * nh, job));
}

CsvTable run_meansquare(const RunConfig& c) {
  require_positive(c.n_grid, "N");
  require_grid(c.xi_grid, "xi");
  const ExpSumConfig cfg{c.ell};
  std::uint64_t need = 2;
  for (auto N : c.n_grid)
    need = std::max(need, c.kind == "classical" ? N : n_max(cfg, N));
  if (c.kind != "tilde" && c.kind != "classical" && c.kind != "omega")
    throw ValidationError("--kind must be tilde, classical or omega");
  const SieveTable sieve = make_sieve(c, need);
  const QuadratureSpec quad = quad_of(c);
  const std::size_t nx = c.xi_grid.size();
  const std::function<MeanSquareReport(std::size_t)> job = [&](std::size_t i) {
    const std::uint64_t N = c.n_grid[i / nx];
    const double xi = c.xi_grid[i % nx];
    if (c.kind == "classical") return mean_square_classical(cfg, N, xi, sieve);
    if (c.kind == "omega") return omega_mean_square(cfg, N, xi, sieve);
    return mean_square_tilde(cfg, N, xi, sieve, quad, c.c1);
  };
  return meansquare_table(parallel_map(c.threads, c.n_grid.size() * nx, job));
}

CsvTable run_fourth_moment(const RunConfig& c) {
  require_positive(c.n_grid, "N");
  const std::uint64_t top = *std::max_element(c.n_grid.begin(), c.n_grid.end());
  const SieveTable sieve = make_sieve(c, n_max(ExpSumConfig{2}, top));
  const std::function<MeanSquareReport(std::size_t)> job = [&](std::size_t i) {
    return fourth_moment(c.n_grid[i], sieve);
  };
  return meansquare_table(parallel_map(c.threads, c.n_grid.size(), job));
}

CsvTable run_expsum_compare(const RunConfig& c) {
  require_positive(c.n_grid, "N");
  require_grid(c.alpha_grid, "alpha");
  const ExpSumConfig cfg{c.ell};
  const std::uint64_t top = *std::max_element(c.n_grid.begin(), c.n_grid.end());
  const ZeroTable zeros = load_table(c);
  const ZeroView view = truncate(zeros, c.height);
  const SieveTable sieve = make_sieve(c, n_max(cfg, top));
  const std::size_t na = c.alpha_grid.size();
  const std::function<Row(std::size_t)> job = [&](std::size_t i) {
    const std::uint64_t N = c.n_grid[i / na];
    const double alpha = c.alpha_grid[i % na];
    const auto p = ComplexParam::segment(N, alpha);
    const Complex s = s_tilde(cfg, p, sieve);
    const Complex l = linnik_approx(cfg, p, view);
    return Row{std::to_string(N),          std::to_string(c.ell),   format_number(alpha),
               format_number(c.height),    format_number(s.real()), format_number(s.imag()),
               format_number(l.real()),    format_number(l.imag()),
               format_number(std::abs(l - s) / std::abs(s))};
  };
  CsvTable t;
  t.header = {"N",           "ell",       "alpha",     "T",        "s_tilde_re",
              "s_tilde_im",  "linnik_re", "linnik_im", "rel_error"};
  t.rows = parallel_map(c.threads, c.n_grid.size() * na, job);
  return t;
}

CsvTable run_laplace_check(const RunConfig& c) {
  require_positive(c.n_grid, "N");
  require_positive(c.freq_grid, "n");
  const QuadratureSpec quad = quad_of(c);
  const std::size_t nf = c.freq_grid.size();
  const std::function<Row(std::size_t)> job = [&](std::size_t i) {
    const std::uint64_t N = c.n_grid[i / nf];
    const std::uint64_t n = c.freq_grid[i % nf];
    const auto r = laplace_segment_check(c.mu, n, N, quad);
    return Row{format_number(c.mu),         std::to_string(n),
               std::to_string(N),           format_number(r.numeric.real()),
               format_number(r.numeric.imag()), format_number(r.closed_form),
               format_number(std::abs(r.numeric - r.closed_form))};
  };
  CsvTable t;
  t.header = {"mu", "n", "N", "numeric_re", "numeric_im", "closed_form", "difference"};
  t.rows = parallel_map(c.threads, c.n_grid.size() * nf, job);
  return t;
}

CsvTable run_theta_check(const RunConfig& c) {
  const auto zs = theta_sample_points();
  const std::function<Row(std::size_t)> job = [&](std::size_t i) {
    const auto z = zs[i];
    return Row{format_number(z.real()), format_number(z.imag()),
               format_number(theta_modular_residual(z))};
  };
  CsvTable t;
  t.header = {"z_re", "z_im", "residual"};
  t.rows = parallel_map(c.threads, zs.size(), job);
  return t;
}

CsvTable run_bessel_check(const RunConfig& c) {
  const auto grid = bessel_check_grid();
  const QuadratureSpec quad = quad_of(c);
  const std::function<Row(std::size_t)> job = [&](std::size_t i) {
    const auto [nu, u] = grid[i];
    const Complex a = bessel_j_series(nu, u);
    const Complex b = bessel_j_sonine(nu, u, c.sonine_a, quad);
    return Row{format_number(nu.real()), format_number(nu.imag()), format_number(u),
               format_number(a.real()),  format_number(a.imag()),  format_number(b.real()),
               format_number(b.imag()),  format_number(std::abs(a - b))};
  };
  CsvTable t;
  t.header = {"nu_re", "nu_im", "u", "series_re", "series_im", "sonine_re", "sonine_im",
              "abs_diff"};
  t.rows = parallel_map(c.threads, grid.size(), job);
  return t;
}

CsvTable run_build_sieve(const RunConfig& c) {
  if (c.limit < 2) throw ValidationError("--limit must be at least 2");
  const SieveTable s = build_sieve(c.limit);
  CsvTable t;
  t.header = {"limit", "primes", "prime_powers", "psi"};
  t.rows.push_back({std::to_string(c.limit), std::to_string(s.primes().size()),
                    std::to_string(s.prime_powers().size()), format_number(s.psi(c.limit))});
  return t;
}

CsvTable dispatch(const RunConfig& c) {
  const auto& cmd = c.command;
  if (cmd == "build-sieve") return run_build_sieve(c);
  if (cmd == "verify-goldbach" || cmd == "verify-cesaro" || cmd == "verify-gy" ||
      cmd == "verify-hl")
    return run_formula(c);
  if (cmd == "verify-shortinterval") return run_short_interval(c);
  if (cmd == "meansquare") return run_meansquare(c);
  if (cmd == "fourthmoment") return run_fourth_moment(c);
  if (cmd == "expsum-compare") return run_expsum_compare(c);
  if (cmd == "laplace-check") return run_laplace_check(c);
  if (cmd == "theta-check") return run_theta_check(c);
  if (cmd == "bessel-check") return run_bessel_check(c);
  throw ValidationError("unknown command '" + cmd + "'");
}

}  // namespace

std::vector<std::complex<double>> theta_sample_points() {
  std::vector<std::complex<double>> zs;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  const double root2 = std::sqrt(2.0) - 1.0;
  for (int j = 0; j < 20; ++j) {
    const double u = std::fmod(0.5 + j * phi, 1.0);
    const double v = std::fmod(0.5 + j * root2, 1.0);
    const double re = 0.05 * std::pow(100.0, u);
    zs.emplace_back(re, (2.0 * v - 1.0) * 0.5 * re);
  }
  return zs;
}

std::vector<BesselCase> bessel_check_grid() {
  const std::complex<double> nus[] = {
      {0.0, 0.0}, {0.5, 0.0}, {2.0, 3.0}, {2.5 + 0.5, 14.134725}};
  std::vector<BesselCase> out;
  for (const auto& nu : nus)
    for (double u : {0.5, 2.0, 5.0, 20.0}) out.push_back({nu, u});
  return out;
}

std::string default_zeros_path() { return std::string(PRIMESUMS_DATA_DIR) + "/zeros.txt"; }

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_output_path(cfg.output_path);
    const CsvTable table = dispatch(cfg);
    const std::string text = table.str();
    if (cfg.output_path.empty()) {
      out << text;
      out.flush();
      if (!out) throw IoError("failed writing CSV to standard output");
    } else {
      write_file_atomic(cfg.output_path, text);
    }
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const AccuracyError& e) {
    err << "accuracy failure: " << e.what() << " (achieved estimate " << e.achieved_estimate
        << ")\n";
    return kAccuracy;
  } catch (const FormatError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::logic_error& e) {
    // InvalidArgument, OutOfRange, DomainError and PoleError.
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kAccuracy;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit-formula and circle-method experiments for prime sums"};
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;

  auto common = [&c](CLI::App* sub) {
    sub->add_option("-o,--output", c.output_path, "CSV destination (default: stdout)");
    sub->add_option("--threads", c.threads, "worker threads (0 = hardware threads)");
    sub->add_option("--sieve-limit", c.sieve_limit, "sieve size (default: what the run needs)");
    sub->add_option("--abs-tol", c.abs_tol, "quadrature absolute tolerance");
    sub->add_option("--rel-tol", c.rel_tol, "quadrature relative tolerance");
  };
  auto n_opt = [&c](CLI::App* sub) {
    sub->add_option("-n,--n", c.n_grid, "N or comma-separated N grid")->delimiter(',')->required();
  };
  auto zeros_opt = [&c](CLI::App* sub, double height) {
    c.height = height;
    sub->add_option("--zeros", c.zeros_path, "zero ordinate file")->default_str(default_zeros_path());
    sub->add_option("--height", c.height, "use zeros with ordinate up to T")->capture_default_str();
  };

  auto* sieve_cmd = app.add_subcommand("build-sieve", "sieve Lambda(n) and report counts");
  sieve_cmd->add_option("--limit", c.limit, "sieve limit")->required();
  common(sieve_cmd);

  auto* gold = app.add_subcommand("verify-goldbach", "sum of R_G(n) against its zero expansion");
  auto* ces = app.add_subcommand("verify-cesaro", "Cesaro-weighted Goldbach formula");
  auto* gy = app.add_subcommand("verify-gy", "linearly weighted Goldbach formula");
  auto* hl = app.add_subcommand("verify-hl", "Cesaro-weighted prime-plus-square formula");
  for (auto* sub : {gold, ces, gy, hl}) {
    common(sub);
    n_opt(sub);
  }
  zeros_opt(gold, 1e4);
  zeros_opt(gy, 1e4);
  double ces_height = 1e3, hl_height = 1e3;
  ces->add_option("--zeros", c.zeros_path, "zero ordinate file");
  ces->add_option("--height", ces_height, "single zero sum height")->capture_default_str();
  ces->add_option("--pair-height", c.pair_height, "double zero sum height")->capture_default_str();
  hl->add_option("--zeros", c.zeros_path, "zero ordinate file");
  hl->add_option("--height", hl_height, "zero height")->capture_default_str();
  hl->add_option("--bessel-ell-max", c.bessel_ell_max, "Bessel series cut")->capture_default_str();
  for (auto* sub : {ces, hl}) sub->add_option("-k,--k", c.k, "Cesaro order")->capture_default_str();

  auto* si = app.add_subcommand("verify-shortinterval", "sums over (N, N+H]");
  common(si);
  n_opt(si);
  si->add_option("--problem", c.problem, "HUA, P1P2SQ, TWO_PSQ or PSQ_SQ")->required();
  si->add_option("-H,--H", c.h_grid, "H or H grid")->delimiter(',')->required();

  auto* ms = app.add_subcommand("meansquare", "truncated mean squares");
  common(ms);
  n_opt(ms);
  ms->add_option("--ell", c.ell, "power ell")->capture_default_str();
  ms->add_option("--xi-grid", c.xi_grid, "xi values")->delimiter(',')->required();
  ms->add_option("--kind", c.kind, "tilde, classical or omega")->capture_default_str();
  ms->add_option("--c1", c.c1, "constant in the unconditional bound")->capture_default_str();

  auto* fm = app.add_subcommand("fourthmoment", "fourth moment of the weighted square sum");
  common(fm);
  n_opt(fm);

  auto* ec = app.add_subcommand("expsum-compare", "weighted sum against its zero expansion");
  common(ec);
  n_opt(ec);
  zeros_opt(ec, 1e4);
  ec->add_option("--ell", c.ell, "power ell")->capture_default_str();
  ec->add_option("--alpha-grid", c.alpha_grid, "alpha values")->delimiter(',')->required();

  auto* lc = app.add_subcommand("laplace-check", "segment integral of z^{-mu} e(-n alpha)");
  common(lc);
  n_opt(lc);
  lc->add_option("--mu", c.mu, "exponent mu")->capture_default_str();
  lc->add_option("--freq", c.freq_grid, "frequencies n")->delimiter(',')->required();

  auto* tc = app.add_subcommand("theta-check", "theta modularity on a fixed sample");
  common(tc);
  auto* bc = app.add_subcommand("bessel-check", "series against contour Bessel values");
  common(bc);
  bc->add_option("--a", c.sonine_a, "abscissa of the Sonine line")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kValidation;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "verify-cesaro") c.height = ces_height;
  if (c.command == "verify-hl") c.height = hl_height;
  return execute(c, out, err);
}

}  // namespace primesums::cli
