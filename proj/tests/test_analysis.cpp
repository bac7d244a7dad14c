#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "primesums/analysis.hpp"
#include "primesums/errors.hpp"
#include "primesums/expsum.hpp"

using namespace primesums;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

const SieveTable& sieve() {
  static const SieveTable s = build_sieve(500'000);
  return s;
}

ExpSumConfig cfg(unsigned ell) {
  ExpSumConfig c;
  c.ell = ell;
  return c;
}

// Plain composite Gauss-Legendre of |f|^2 over [-xi, xi].
template <class F>
double brute_mean_square(F f, double xi, int panels) {
  const auto& r = gauss_legendre(8);
  const double h = 2 * xi / panels;
  double s = 0.0;
  for (int p = 0; p < panels; ++p)
    for (int i = 0; i < 8; ++i) {
      const double x = -xi + h * (p + 0.5 * (r.nodes[i] + 1.0));
      s += 0.5 * h * r.weights[i] * std::norm(f(x));
    }
  return s;
}

}  // namespace

TEST_CASE("laplace line integral") {
  const QuadratureSpec q;
  CHECK(std::abs(line_integral_laplace(1.0, 1.0, 0.0, q) - 0.5) <= 1e-6);
  CHECK(std::abs(line_integral_laplace(2.0, 1.0, -1.0, q)) <= 1e-6);
  CHECK(std::abs(line_integral_laplace(2.0, 1.0, 1.0, q) - std::exp(-1.0)) <= 1e-6);
  // D^{s-1} e^{-aD} / Gamma(s) for other parameters.
  CHECK(std::abs(line_integral_laplace(3.0, 0.5, 2.0, q) - 4.0 * std::exp(-1.0) / 2.0) <= 1e-6);
  CHECK(std::abs(line_integral_laplace(2.5, 1.0, 0.0, q)) <= 1e-6);
  CHECK_THROWS_AS(line_integral_laplace(0.5, 1.0, 0.0, q), DomainError);
  CHECK_THROWS_AS(line_integral_laplace(cd(1.0, 2.0), 1.0, 0.0, q), DomainError);
}

TEST_CASE("segment check") {
  const QuadratureSpec q;
  const auto a = laplace_segment_check(1.0, 100, 100, q);
  CHECK(a.closed_form == doctest::Approx(std::exp(-1.0)));
  CHECK(std::abs(a.numeric - a.closed_form) <= 0.05);
  const auto b = laplace_segment_check(2.0, 50, 100, q);
  CHECK(b.closed_form == doctest::Approx(std::exp(-0.5) * 50.0));
  CHECK(std::abs(b.numeric - b.closed_form) <= 1.0);
  const auto c = laplace_segment_check(1.0, 10000, 10000, q);
  CHECK(std::abs(c.numeric - c.closed_form) <= 0.01);

  double d[3];
  const std::uint64_t ns[3] = {100, 1000, 10000};
  for (int i = 0; i < 3; ++i) {
    const auto r = laplace_segment_check(1.0, ns[i], ns[i], q);
    d[i] = std::abs(r.numeric - r.closed_form);
  }
  const double slope = (std::log(d[2]) - std::log(d[0])) / (std::log(1e4) - std::log(1e2));
  CHECK(slope >= -1.3);
  CHECK(slope <= -0.7);
}

TEST_CASE("trig sum evaluator") {
  std::vector<std::pair<std::int64_t, double>> coeffs;
  for (std::int64_t k = 0; k < 5000; k += 7) coeffs.push_back({k, 1.0 / (1 + k)});
  coeffs.push_back({250000, 0.5});
  const TrigSum t(coeffs);
  CHECK(t.max_frequency() == 250000);
  for (double a : {0.0, 0.1234567, -0.4321, 0.5}) {
    cd direct = 0.0;
    for (auto [k, c] : coeffs) direct += c * e_turns(static_cast<long double>(k) * a);
    CHECK(std::abs(t(a) - direct) <= 1e-11);
  }
}

TEST_CASE("exact pair mean square against quadrature") {
  std::vector<std::pair<std::int64_t, double>> coeffs = {{1, 1.0}, {4, -0.5}, {9, 2.0}, {30, 0.25}};
  const TrigSum t(coeffs);
  for (double xi : {0.01, 0.13, 0.5}) {
    const double brute = brute_mean_square([&](double a) { return t(a); }, xi, 200);
    CHECK(trig_mean_square(coeffs, xi) == doctest::Approx(brute).epsilon(1e-12));
  }
  CHECK(trig_mean_square(coeffs, 0.5) == doctest::Approx(1 + 0.25 + 4 + 0.0625).epsilon(1e-14));
}

TEST_CASE("tilde mean square") {
  const QuadratureSpec q;
  // Brute-force oracle at a small N.
  const std::uint64_t n = 60;
  const double xi = 0.05;
  const auto brute = brute_mean_square(
      [&](double a) {
        const auto p = ComplexParam::segment(n, a);
        return s_tilde(cfg(1), p, sieve()) - linnik_main(cfg(1), p);
      },
      xi, 4000);
  CHECK(mean_square_tilde(cfg(1), n, xi, sieve(), q).integral == doctest::Approx(brute).epsilon(1e-9));

  const auto r = mean_square_tilde(cfg(1), 1000, 1e-3, sieve(), q);
  CHECK(r.bound_kind == BoundKind::RH);
  CHECK(r.ratio <= 10.0);
  CHECK(r.bound == doctest::Approx(1000 * 1e-3 * std::pow(std::log(1000.0), 2)));
  double prev = INFINITY;
  for (double x : {1e-2, 1e-3, 1e-4}) {
    const double v = mean_square_tilde(cfg(1), 1000, x, sieve(), q).integral;
    CHECK(v < prev);
    prev = v;
  }
  CHECK(mean_square_tilde(cfg(2), 1000, 0.0, sieve(), q).integral == 0.0);
  CHECK_THROWS_AS(mean_square_tilde(cfg(1), 1000, 0.6, sieve(), q), InvalidArgument);
}

TEST_CASE("classical mean square") {
  const std::uint64_t N = 1000;
  const auto r = mean_square_classical(cfg(1), N, 1.0 / (2 * N), sieve());
  CHECK(r.ratio <= 10.0);
  CHECK_FALSE(r.range_warning);
  const double xi = 0.002;
  const auto brute = brute_mean_square(
      [&](double a) {
        const auto p = ComplexParam::segment(N, a);
        return s_classical(cfg(2), p, sieve()) - t_sum(cfg(2), p);
      },
      xi, 20000);
  const auto w = mean_square_classical(cfg(2), N, xi, sieve());
  CHECK(w.integral == doctest::Approx(brute).epsilon(1e-9));
  CHECK_FALSE(w.range_warning);
  // Past N^{1/l - 1} / 2 the bound is not claimed but the value is still computed.
  const auto far = mean_square_classical(cfg(2), N, 0.02, sieve());
  CHECK(far.range_warning);
  CHECK(far.integral > w.integral);

  const double lsq = [&] {
    double s = 0.0;
    for (std::uint64_t m = 1; m <= N; ++m) s += sieve().lambda(m) * sieve().lambda(m);
    return s;
  }();
  CHECK(classical_full_period_mean_square(cfg(1), N, sieve(), QuadratureSpec{}) ==
        doctest::Approx(lsq).epsilon(1e-8));
}

TEST_CASE("omega mean square") {
  const auto a = omega_mean_square(cfg(2), 10000, 0.5, sieve());
  const double ref = 0.5 * 100.0 + std::log(1e4);
  CHECK(a.integral <= 10 * ref);
  CHECK(a.integral >= ref / 10);
  const auto b = omega_mean_square(cfg(3), 10000, 1e-3, sieve());
  CHECK(b.integral / (1e-3 * std::cbrt(1e4) + 1.0) <= 10.0);
  CHECK_THROWS_AS(omega_mean_square(cfg(1), 10000, 0.1, sieve()), InvalidArgument);
}

TEST_CASE("fourth moment") {
  const auto s = fourth_moment(200, sieve());
  CHECK(s.integral == doctest::Approx(s.companion_integral).epsilon(1e-4));
  // Independent check of the Parseval value by brute quadrature of |S~_2|^4.
  const auto brute = [&] {
    const auto& r = gauss_legendre(8);
    const int panels = 40000;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p)
      for (int i = 0; i < 8; ++i) {
        const double x = -0.5 + (p + 0.5 * (r.nodes[i] + 1.0)) / panels;
        acc += 0.5 / panels * r.weights[i] *
               std::pow(std::norm(s_tilde(cfg(2), ComplexParam::segment(200, x), sieve())), 2);
      }
    return acc;
  }();
  CHECK(s.integral == doctest::Approx(brute).epsilon(1e-8));
  const auto t = fourth_moment(1000, sieve());
  CHECK(t.ratio <= 10.0);
  CHECK_THROWS_AS(fourth_moment(50, sieve()), InvalidArgument);
}
