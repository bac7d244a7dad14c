#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace primesums::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kAccuracy = 3, kIo = 4 };

/// Everything one run needs, after flags, config file and defaults are merged.
struct RunConfig {
  std::string command;
  std::vector<std::uint64_t> n_grid;
  std::vector<std::uint64_t> h_grid;
  std::vector<double> xi_grid;
  std::vector<double> alpha_grid;
  std::vector<std::uint64_t> freq_grid;
  std::string problem;
  std::string kind = "tilde";
  double k = 2.0;
  unsigned ell = 1;
  double height = 1e4;
  double pair_height = 1e3;
  unsigned bessel_ell_max = 50;
  double mu = 1.0;
  double sonine_a = 1.0;
  double c1 = 1.0;
  std::uint64_t limit = 0;
  std::uint64_t sieve_limit = 0;
  std::string zeros_path;
  std::string output_path;
  unsigned threads = 0;
  double abs_tol = 1e-13;
  double rel_tol = 1e-10;
};

/// The fixed z sample used by theta-check: 20 points with Re(z) in
/// [0.05, 5] and |Im(z)| <= Re(z)/2, spread by a golden-ratio sequence.
std::vector<std::complex<double>> theta_sample_points();

/// (nu, u) pairs compared by bessel-check.
struct BesselCase {
  std::complex<double> nu;
  double u;
};
std::vector<BesselCase> bessel_check_grid();

/// Default location of the bundled zero table.
std::string default_zeros_path();

/// Parse argv (flags > --config file > defaults) and execute. Diagnostics go
/// to `err`; CSV goes to --output, or to `out` when no path is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Execute an already merged configuration.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace primesums::cli
