#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "primesums/arith.hpp"
#include "primesums/zeros.hpp"

namespace primesums {

using Complex = std::complex<double>;

/// A point z with Re(z) = 1/N, either on the segment z = 1/N - 2 pi i alpha
/// or on the vertical line z = 1/N + i y.
struct ComplexParam {
  std::uint64_t N = 1;
  Complex z{1.0, 0.0};
  /// -Im(z) / (2 pi): alpha itself on the segment, kept exact so that the
  /// phases e(n alpha) can be reduced without rounding alpha first.
  long double turns = 0.0L;
  bool vertical = false;

  static ComplexParam segment(std::uint64_t N, double alpha);
  static ComplexParam vertical_line(std::uint64_t N, double y);
  double alpha() const { return static_cast<double>(turns); }
};

struct ExpSumConfig {
  unsigned ell = 1;
  double tail_epsilon = 1e-18;
};

/// Smallest n with e^{-n^ell/N} < tail_epsilon.
std::uint64_t n_max(const ExpSumConfig& cfg, std::uint64_t N);

/// e(x) = exp(2 pi i x) with x reduced mod 1 in extended precision.
Complex e_turns(long double x);

/// sum_{n >= 1} Lambda(n) e^{-n^ell z}, cut at n_max.
Complex s_tilde(const ExpSumConfig& cfg, const ComplexParam& p, const SieveTable& sieve);

/// sum_{n <= N} Lambda(n) e(n^ell alpha).
Complex s_classical(const ExpSumConfig& cfg, const ComplexParam& p, const SieveTable& sieve);

/// sum_{n <= N} e(n^ell alpha).
Complex t_sum(const ExpSumConfig& cfg, const ComplexParam& p);

/// sum over m >= 1 with m^ell <= N of e(m^ell alpha); the counterpart of f2
/// in the square-sum comparison.
Complex t_sum_powers(const ExpSumConfig& cfg, const ComplexParam& p);

/// sum_{m >= 1} e^{-m^ell z}, cut at n_max.
Complex omega(const ExpSumConfig& cfg, const ComplexParam& p);

/// sum_{1 <= m <= H} e(m alpha).
Complex u_sum(double alpha, std::uint64_t H);

/// (1/2) sum_{m <= N} m^{-1/2} e(m alpha).
Complex f2(std::uint64_t N, double alpha);

/// Main term Gamma(1/ell) / (ell z^{1/ell}).
Complex linnik_main(const ExpSumConfig& cfg, const ComplexParam& p);

/// Main term minus (1/ell) sum over rho and its conjugate of
/// z^{-rho/ell} Gamma(rho/ell).
Complex linnik_approx(const ExpSumConfig& cfg, const ComplexParam& p, ZeroView zeros);

/// s_tilde(z) - 1/z + sum_rho z^{-rho} Gamma(rho) at z = 1/N + i y, ell = 1.
Complex linnik_vertical(std::uint64_t N, double y, ZeroView zeros, const SieveTable& sieve);

/// Nonzero coefficients of s_tilde as a trigonometric polynomial in alpha:
/// pairs (n^ell, Lambda(n) e^{-n^ell/N}).
std::vector<std::pair<std::int64_t, double>> s_tilde_coefficients(const ExpSumConfig& cfg,
                                                                  std::uint64_t N,
                                                                  const SieveTable& sieve);

}  // namespace primesums
