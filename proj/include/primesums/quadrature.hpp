#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace primesums {

/// Controls for every numerical integral in the library.
///
/// Composite rules start from panels no wider than 1/(4 f), where f is the
/// highest oscillation frequency (cycles per unit) the caller declares for
/// the integrand, and double the panel count until two successive values
/// differ by less than max(abs_tol, rel_tol * |value|).
struct QuadratureSpec {
  std::size_t max_panels = std::size_t{1} << 22;
  int points_per_panel = 6;
  /// Largest declared frequency the engine accepts; larger ones are an
  /// AccuracyError rather than a silently under-resolved integral.
  double osc_freq_cap = std::numeric_limits<double>::infinity();
  double abs_tol = 1e-13;
  double rel_tol = 1e-10;
};

using ComplexFn = std::function<std::complex<double>(double)>;

struct QuadResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

/// Fixed composite Gauss-Legendre rule with `panels` equal panels.
std::complex<double> composite_gauss_legendre(const ComplexFn& f, double a, double b,
                                              std::size_t panels, int points);

/// Composite Gauss-Legendre with panel doubling until converged.
/// `frequency` is the integrand's highest oscillation frequency.
QuadResult integrate_oscillatory(const ComplexFn& f, double a, double b, double frequency,
                                 const QuadratureSpec& spec);

/// Globally adaptive Gauss-Kronrod (7/15) over several pieces at once; the
/// returned value is the sum of the integrals of pieces[i].second over
/// pieces[i].first. Error control is on the total.
struct AdaptivePiece {
  double a;
  double b;
  ComplexFn f;
  std::size_t initial_splits = 1;
};
QuadResult integrate_adaptive(std::span<const AdaptivePiece> pieces, double abs_tol,
                              double rel_tol, std::size_t max_intervals = 200000);

/// Mean of f over the equispaced grid alpha_j = -1/2 + j/M, j < M. Exact for
/// trigonometric polynomials in alpha whose frequencies are all below M in
/// absolute value.
std::complex<double> periodic_trapezoid(const ComplexFn& f, std::size_t M);

/// Values of the trigonometric polynomial sum_k c_k e(f_k alpha) at
/// alpha_j = j/M for j < M, computed with one FFT.
std::vector<std::complex<double>> trig_poly_on_grid(
    std::span<const std::pair<std::int64_t, std::complex<double>>> terms, std::size_t M);

}  // namespace primesums
