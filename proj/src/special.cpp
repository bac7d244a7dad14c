#include "primesums/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "primesums/errors.hpp"
#include "primesums/summation.hpp"

namespace primesums {

namespace {

using std::numbers::pi;
using ComplexL = std::complex<long double>;

const Complex I{0.0, 1.0};

std::string describe(Complex s) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << s.real() << ", " << s.imag() << ")";
  return os.str();
}

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

void check_bessel_order(Complex nu) {
  if (!(nu.real() > -1.0))
    throw InvalidArgument("Bessel order needs Re(nu) > -1, got " + describe(nu));
}

// sum_{m>=0} (-u^2/4)^m / (m! (nu+1)_m) in extended precision.
ComplexL reduced_series(Complex nu, double u) {
  const ComplexL nul(nu.real(), nu.imag());
  const long double q = -0.25L * static_cast<long double>(u) * u;
  ComplexL term = 1.0L;
  ComplexL sum = 1.0L;
  for (int m = 1; m <= 500; ++m) {
    term *= q / (static_cast<long double>(m) * (nul + static_cast<long double>(m)));
    sum += term;
    if (std::abs(term) < 1e-18L * std::abs(sum)) return sum;
  }
  throw AccuracyError("Bessel series did not converge within 500 terms for nu=" + describe(nu) +
                      ", u=" + std::to_string(u));
}

ComplexL reduced_series_derivative(Complex nu, double u) {
  const ComplexL nul(nu.real(), nu.imag());
  const long double q = -0.25L * static_cast<long double>(u) * u;
  ComplexL term = 1.0L;
  ComplexL sum = 0.0L;
  for (int m = 1; m <= 500; ++m) {
    term *= q / (static_cast<long double>(m) * (nul + static_cast<long double>(m)));
    const ComplexL d = term * (2.0L * m / static_cast<long double>(u));
    sum += d;
    if (std::abs(d) < 1e-18L * std::abs(sum)) return sum;
  }
  throw AccuracyError("Bessel derivative series did not converge for nu=" + describe(nu));
}

// Where the series stops being the method of choice: its largest term is
// then at most a few tens.
double series_limit(Complex nu) { return 4.0 * std::sqrt(std::max(1.0, std::abs(nu + 1.0))); }

// One Taylor step of u f'' + (2 nu + 1) f' + u f = 0 from uc to uc + h.
void taylor_step(Complex nu, double uc, double h, Complex& f, Complex& df) {
  Complex a_prev2 = 0.0;    // a_{n-1}
  Complex a_prev = f;       // a_n
  Complex a_cur = df;       // a_{n+1}
  Complex value = f + df * h;
  Complex deriv = df;
  double hp = h;  // h^{n+1}
  const Complex two_nu_1 = 2.0 * nu + 1.0;
  int quiet = 0;
  for (int n = 0; n < 120; ++n) {
    const double n1 = n + 1.0;
    const Complex a_next =
        -((n1 * (static_cast<double>(n) + two_nu_1)) * a_cur + uc * a_prev + a_prev2) /
        (uc * n1 * (n + 2.0));
    const double hn2 = hp * h;  // h^{n+2}
    const Complex tv = a_next * hn2;
    const Complex td = a_next * ((n + 2.0) * hp);
    value += tv;
    deriv += td;
    a_prev2 = a_prev;
    a_prev = a_cur;
    a_cur = a_next;
    hp = hn2;
    const double scale = std::abs(value) + std::abs(deriv) * h;
    if (std::abs(tv) + std::abs(td) * h < 1e-18 * scale) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  f = value;
  df = deriv;
}

}  // namespace

Complex log_gamma(Complex s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
    throw PoleError("Gamma has a pole at s=" + describe(s));
  CompensatedComplexSum shift;
  Complex w = s;
  while (w.real() < 12.0) {
    shift += std::log(w);
    w += 1.0;
  }
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = kStirling.back();
  for (int k = static_cast<int>(kStirling.size()) - 2; k >= 0; --k) series = series * inv2 + kStirling[k];
  series *= inv;
  CompensatedComplexSum acc;
  acc += (w - 0.5) * std::log(w);
  acc += -w;
  acc += 0.5 * std::log(2.0 * pi);
  acc += series;
  acc += -shift.value();
  return acc.value();
}

Complex gamma_ratio(Complex num, Complex den) { return std::exp(log_gamma(num) - log_gamma(den)); }

Complex gamma(Complex s) { return std::exp(log_gamma(s)); }

Complex bessel_j_series(Complex nu, double u) {
  check_bessel_order(nu);
  if (!(u >= 0.0) || u > 50.0)
    throw InvalidArgument("bessel_j_series needs 0 <= u <= 50, got " + std::to_string(u));
  if (u == 0.0) {
    if (nu == Complex{0.0, 0.0}) return 1.0;
    if (nu.real() > 0.0) return 0.0;
    throw DomainError("J_nu(0) is unbounded for Re(nu) <= 0, nu=" + describe(nu));
  }
  const Complex lead = std::exp(nu * std::log(0.5 * u) - log_gamma(nu + 1.0));
  const ComplexL s = reduced_series(nu, u);
  return lead * Complex(static_cast<double>(s.real()), static_cast<double>(s.imag()));
}

std::vector<Complex> bessel_j_reduced_sweep(Complex nu, std::span<const double> us) {
  check_bessel_order(nu);
  std::vector<Complex> out;
  out.reserve(us.size());
  const double u_series = series_limit(nu);
  bool started = false;
  double uc = 0.0;
  Complex f, df;
  double last = -1.0;
  for (double target : us) {
    if (!(target >= 0.0) || target < last)
      throw InvalidArgument("Bessel sweep points must be nonnegative and ascending");
    last = target;
    if (target <= u_series) {
      const auto s = reduced_series(nu, target);
      out.emplace_back(static_cast<double>(s.real()), static_cast<double>(s.imag()));
      continue;
    }
    if (!started) {
      uc = u_series;
      const auto s = reduced_series(nu, uc);
      const auto d = reduced_series_derivative(nu, uc);
      f = {static_cast<double>(s.real()), static_cast<double>(s.imag())};
      df = {static_cast<double>(d.real()), static_cast<double>(d.imag())};
      started = true;
    }
    const double order_scale = std::abs(nu + 0.5);
    while (uc < target) {
      const double h = std::min({0.5 * uc, 2.0 / (1.0 + order_scale / uc), target - uc});
      taylor_step(nu, uc, h, f, df);
      uc = (target - uc == h) ? target : uc + h;
    }
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
      throw AccuracyError("Bessel continuation overflowed for nu=" + describe(nu));
    out.push_back(f);
  }
  return out;
}

Complex bessel_j_reduced(Complex nu, double u) {
  const double us[1] = {u};
  return bessel_j_reduced_sweep(nu, us).front();
}

Complex bessel_j(Complex nu, double u) {
  check_bessel_order(nu);
  if (u == 0.0) return bessel_j_series(nu, 0.0);
  return std::exp(nu * std::log(0.5 * u) - log_gamma(nu + 1.0)) * bessel_j_reduced(nu, u);
}

Complex bessel_j_sonine(Complex nu, double u, double a, const QuadratureSpec& quad) {
  check_bessel_order(nu);
  if (!(a > 0.0)) throw InvalidArgument("Sonine line needs a > 0");
  if (!(u > 0.0)) throw InvalidArgument("Sonine representation needs u > 0");
  const double q = 0.25 * u * u;
  const Complex nu1 = nu + 1.0;
  auto g = [nu1, q](Complex s) { return std::exp(-nu1 * std::log(s) + s - q / s); };
  const double B = std::max({10.0, 2.0 * std::abs(nu), 2.0 * q});
  const double X = 60.0 + a + pi * std::fabs(nu.imag());

  std::array<AdaptivePiece, 3> pieces{{
      {-B, B, [&](double t) { return I * g({a, t}); }, static_cast<std::size_t>(2 * B)},
      {0.0, X, [&](double x) { return -g({a - x, B}); }, 32},
      {0.0, X, [&](double x) { return g({a - x, -B}); }, 32},
  }};

  double peak = 0.0;
  for (int j = 0; j <= 400; ++j) {
    const double t = -B + 2.0 * B * j / 400.0;
    peak = std::max(peak, std::abs(g({a, t})));
  }
  for (int j = 0; j <= 100; ++j) {
    const double x = X * j / 100.0;
    peak = std::max({peak, std::abs(g({a - x, B})), std::abs(g({a - x, -B}))});
  }
  const double rel = std::min(quad.rel_tol, 1e-13);
  const auto res = integrate_adaptive(pieces, 1e-16 * peak, rel);
  return std::exp(nu * std::log(0.5 * u)) * res.value / (2.0 * pi * I);
}

Complex theta(Complex z) {
  if (!(z.real() > 0.0)) throw DomainError("theta needs Re(z) > 0, got z=" + describe(z));
  CompensatedComplexSum acc;
  // Phase m^2 Im(z) is reduced in extended precision; in double it would
  // lose m^2 ulps.
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (double m = 1.0;; m += 1.0) {
    const double m2 = m * m;
    const double mag = std::exp(-m2 * z.real());
    if (mag < 1e-18) break;
    long double phase = -static_cast<long double>(m2) * z.imag();
    phase -= two_pi * std::roundl(phase / two_pi);
    acc += mag * Complex(static_cast<double>(std::cos(phase)), static_cast<double>(std::sin(phase)));
  }
  return 1.0 + 2.0 * acc.value();
}

double theta_modular_residual(Complex z) {
  if (!(z.real() > 0.0)) throw DomainError("theta needs Re(z) > 0, got z=" + describe(z));
  const Complex dual = pi * pi / z;
  if (!(dual.real() > 0.0)) throw DomainError("theta needs Re(pi^2/z) > 0");
  return std::abs(theta(z) - std::sqrt(pi / z) * theta(dual));
}

}  // namespace primesums
