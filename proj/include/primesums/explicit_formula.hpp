#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "primesums/arith.hpp"
#include "primesums/quadrature.hpp"
#include "primesums/zeros.hpp"

namespace primesums {

/// Term names, in CSV column order.
inline constexpr const char* kTermNames[] = {"main",           "secondary_main", "zero_sum_1",
                                             "zero_sum_2",     "double_zero_sum", "bessel_sum",
                                             "bessel_zero_sum"};

/// One explicit-formula evaluation. Every stored term is the signed amount
/// it contributes to the right-hand side, so residual = lhs - sum(terms).
struct FormulaReport {
  ProblemKind problem = ProblemKind::GOLDBACH;
  std::uint64_t N = 0;
  std::optional<double> k;
  std::optional<std::uint64_t> H;
  /// Zero height; defaults to the largest ordinate in the view.
  std::optional<double> T;
  double lhs = 0.0;
  std::map<std::string, double> terms;
  /// Imaginary parts discarded when the zero sums were stored as reals.
  std::map<std::string, double> discarded_imag;
  double residual = 0.0;
  double reference_bound = 0.0;
  double ratio = 0.0;

  /// k lies in (1/2, 1], outside the range where the formula is proved.
  bool outside_proven_range = false;
  /// Part of double_zero_sum from pairs with max(|gamma|) in (T2/2, T2].
  double double_sum_tail = 0.0;
  /// |J| <= 1 estimate of the omitted l > l_max part of bessel_sum.
  double bessel_tail_estimate = 0.0;

  double term(const std::string& name) const;
  /// Recompute residual and ratio from lhs, terms and reference_bound.
  void finish();
};

/// sum_{n<=N} R_G(n) against N^2/2 - 2 sum_rho N^{rho+1}/(rho(rho+1)).
FormulaReport goldbach_average(std::uint64_t N, ZeroView zeros, const SieveTable& sieve);

/// Cesaro-weighted Goldbach average of order k. The double sum runs over
/// zeros with ordinate up to T2.
FormulaReport goldbach_cesaro(std::uint64_t N, double k, ZeroView zeros, const SieveTable& sieve,
                              double T2);

/// sum_{n<=N} R_G(n)(1 - n/N) against N^2/6 - 2 sum_rho N^{rho+1}/(rho(rho+1)(rho+2)).
FormulaReport goldston_yang(std::uint64_t N, ZeroView zeros, const SieveTable& sieve);

/// Cesaro-weighted prime-plus-square average with its six terms; the Bessel
/// series are cut at l_max.
FormulaReport hl_cesaro(std::uint64_t N, double k, ZeroView zeros, const SieveTable& sieve,
                        unsigned l_max);

/// Short-interval sums over (N, N+H] for HUA, P1P2SQ, TWO_PSQ, PSQ_SQ.
FormulaReport short_interval_report(ProblemKind kind, std::uint64_t N, std::uint64_t H,
                                    const SieveTable& sieve);

/// Main term and reference bound used by short_interval_report.
double short_interval_main(ProblemKind kind, std::uint64_t N, std::uint64_t H);
double short_interval_bound(ProblemKind kind, std::uint64_t N, std::uint64_t H);

/// The split of int S~_1^2 K over [-1/2, 1/2], K(alpha) = sum_{m<=H} e(-(N+m) alpha):
///   total          int S~_1^2 K (trapezoid on an FFT grid, exact)
///   main_integral  int M_1^2 K with M_1 = 1/z (Gauss-Legendre)
///   rest_integral  total - main_integral
///   direct         exp_weighted_short_sum(N, H)
/// and, when with_split is set,
///   split_near     H int_{-1/H}^{1/H} |S~_1 - M_1|^2
///   split_far      int_{1/H}^{1/2} |S~_1 - M_1|^2 / alpha.
std::map<std::string, double> circle_decomposition_diag(std::uint64_t N, std::uint64_t H,
                                                        const SieveTable& sieve,
                                                        const QuadratureSpec& quad,
                                                        bool with_split = false);

}  // namespace primesums
