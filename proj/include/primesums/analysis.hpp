#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "primesums/arith.hpp"
#include "primesums/expsum.hpp"
#include "primesums/quadrature.hpp"

namespace primesums {

enum class BoundKind { RH, UNCONDITIONAL };
std::string_view to_string(BoundKind kind);

struct MeanSquareReport {
  std::uint64_t N = 0;
  unsigned ell = 1;
  double xi = 0.0;
  double integral = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  BoundKind bound_kind = BoundKind::RH;
  /// Second bound where one applies: the l = 1 refinement for the classical
  /// sum, or the unconditional shape (with the caller's c1) otherwise.
  double alt_bound = 0.0;
  /// xi lies outside the range where the bound is claimed.
  bool range_warning = false;
  /// omega_mean_square also integrates |S~|^2; fourth_moment stores its
  /// Parseval value here.
  double companion_integral = 0.0;
  double companion_bound = 0.0;
};

/// sum_j c_j e(k_j alpha) with k_j >= 0. Long sums use a baby-step /
/// giant-step table of e(j alpha) so each term costs one multiplication.
class TrigSum {
 public:
  explicit TrigSum(std::vector<std::pair<std::int64_t, double>> coeffs);
  std::complex<double> operator()(double alpha) const;
  std::int64_t max_frequency() const { return max_freq_; }
  std::span<const std::pair<std::int64_t, double>> coefficients() const { return coeffs_; }

 private:
  std::vector<std::pair<std::int64_t, double>> coeffs_;
  std::int64_t max_freq_ = 0;
  std::int64_t block_ = 0;
};

/// (1/2 pi) int_R e^{iDu} (a + iu)^{-s} du, principal value when s = 1 and D = 0.
std::complex<double> line_integral_laplace(std::complex<double> s, double a, double D,
                                           const QuadratureSpec& quad);

struct SegmentCheck {
  std::complex<double> numeric;
  double closed_form = 0.0;
};

/// int_{-1/2}^{1/2} z^{-mu} e(-n alpha) d alpha with z = 1/N - 2 pi i alpha,
/// next to e^{-n/N} n^{mu-1} / Gamma(mu).
SegmentCheck laplace_segment_check(double mu, std::uint64_t n, std::uint64_t N,
                                   const QuadratureSpec& quad);

/// int_{-xi}^{xi} |sum_j c_j e(k_j alpha)|^2 d alpha for real c_j, summed
/// exactly over pairs.
double trig_mean_square(std::span<const std::pair<std::int64_t, double>> coeffs, double xi);

/// int_{-xi}^{xi} |S~_l - Gamma(1/l)/(l z^{1/l})|^2; bound N^{1/l} xi L^2,
/// alt_bound N^{2/l-1} exp(-c1 (L / log L)^{1/3}).
MeanSquareReport mean_square_tilde(const ExpSumConfig& cfg, std::uint64_t N, double xi,
                                   const SieveTable& sieve, const QuadratureSpec& quad,
                                   double c1 = 1.0);

/// int_{-xi}^{xi} |S_l - T_l|^2, exact through trig_mean_square; bound
/// N^{1/l} xi L^2 + N^{2/l-2} L^2 / xi. For l = 1 alt_bound is
/// N xi L^2 + min(L^2 / (xi log^2(3 xi)), N xi L^4).
MeanSquareReport mean_square_classical(const ExpSumConfig& cfg, std::uint64_t N, double xi,
                                       const SieveTable& sieve);

/// int_{-1/2}^{1/2} |S_l|^2 by composite Gauss-Legendre.
double classical_full_period_mean_square(const ExpSumConfig& cfg, std::uint64_t N,
                                         const SieveTable& sieve, const QuadratureSpec& quad);

/// int_{-xi}^{xi} |omega_l|^2 with companion int |S~_l|^2, l >= 2.
MeanSquareReport omega_mean_square(const ExpSumConfig& cfg, std::uint64_t N, double xi,
                                   const SieveTable& sieve);

/// int_{-1/2}^{1/2} |S~_2|^4 by the trapezoid rule on an FFT grid fine enough
/// to be exact; companion_integral holds the Parseval sum
/// sum_k (sum_{n1^2 + n2^2 = k} c_{n1} c_{n2})^2.
MeanSquareReport fourth_moment(std::uint64_t N, const SieveTable& sieve);

}  // namespace primesums
