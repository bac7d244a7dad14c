#pragma once

#include <complex>
#include <span>
#include <vector>

#include "primesums/quadrature.hpp"

namespace primesums {

using Complex = std::complex<double>;

/// Analytic log Gamma on C minus (-inf, 0] (the branch that is real on the
/// positive axis). Stirling series after upward shifting; relative accuracy
/// about 1e-14 for |s| <= 200. Throws PoleError at nonpositive integers.
Complex log_gamma(Complex s);

/// Gamma(num) / Gamma(den) through log_gamma, without forming either Gamma.
Complex gamma_ratio(Complex num, Complex den);

/// exp(log_gamma(s)).
Complex gamma(Complex s);

/// J_nu(u) by its power series, summed in extended precision until the term
/// falls below 1e-18 of the partial sum. Needs Re(nu) > -1 and 0 <= u <= 50.
/// Cancellation costs about e^u * 1e-19 absolute, so past u ~ 20 prefer
/// bessel_j.
Complex bessel_j_series(Complex nu, double u);

/// J_nu(u) from the Sonine contour integral
///   (u/2)^nu / (2 pi i) int_{(a)} s^{-nu-1} e^s e^{-u^2/(4s)} ds.
/// The segment |Im s| <= B of the line Re s = a is integrated directly; the
/// two remaining half-lines are swung onto horizontal rays Im s = +-B running
/// to Re s = -inf, where e^s decays. Needs Re(nu) > -1 and a > 0.
Complex bessel_j_sonine(Complex nu, double u, double a, const QuadratureSpec& quad);

/// Gamma(nu+1) (2/u)^nu J_nu(u) = 0F1(; nu+1; -u^2/4), an entire function
/// that stays representable for large |Im nu|. Series for small u, then a
/// Taylor-series continuation of u f'' + (2 nu + 1) f' + u f = 0.
Complex bessel_j_reduced(Complex nu, double u);

/// bessel_j_reduced at every point of an ascending list, sharing one sweep.
std::vector<Complex> bessel_j_reduced_sweep(Complex nu, std::span<const double> us);

/// J_nu(u) for any u >= 0 via bessel_j_reduced.
Complex bessel_j(Complex nu, double u);

/// theta(z) = sum_{m in Z} e^{-m^2 z}, Re(z) > 0.
Complex theta(Complex z);

/// |theta(z) - (pi/z)^{1/2} theta(pi^2/z)| with the principal square root.
double theta_modular_residual(Complex z);

}  // namespace primesums
