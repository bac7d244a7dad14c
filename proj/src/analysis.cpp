#include "primesums/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "primesums/errors.hpp"
#include "primesums/special.hpp"
#include "primesums/summation.hpp"

namespace primesums {

namespace {

using std::numbers::pi;
using Complex = std::complex<double>;

const Complex I{0.0, 1.0};

// sin(2 pi d xi) / (pi d), the integral of e(d alpha) over [-xi, xi].
double window(std::int64_t d, double xi) {
  if (d == 0) return 2.0 * xi;
  const long double x = static_cast<long double>(d) * xi;
  const long double r = x - std::roundl(x);
  return static_cast<double>(std::sin(2.0L * std::numbers::pi_v<long double> * r) /
                             (std::numbers::pi_v<long double> * static_cast<long double>(d)));
}

double log_n(std::uint64_t N) { return std::log(static_cast<double>(N)); }

std::int64_t int_power(std::uint64_t n, unsigned ell) {
  long double r = 1.0L;
  for (unsigned i = 0; i < ell; ++i) r *= static_cast<long double>(n);
  if (r > 4.0e18L) throw OutOfRange("frequency n^ell exceeds the 64-bit range");
  return static_cast<std::int64_t>(r);
}

double unconditional_shape(std::uint64_t N, unsigned ell, double c1) {
  const double L = log_n(N);
  return std::pow(static_cast<double>(N), 2.0 / ell - 1.0) *
         std::exp(-c1 * std::cbrt(L / std::log(L)));
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::RH ? "RH" : "UNCONDITIONAL";
}

TrigSum::TrigSum(std::vector<std::pair<std::int64_t, double>> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& [k, c] : coeffs_) {
    if (k < 0) throw InvalidArgument("TrigSum frequencies must be nonnegative");
    max_freq_ = std::max(max_freq_, k);
  }
  const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_freq_))) + 1;
  if (static_cast<std::int64_t>(coeffs_.size()) > 2 * root) block_ = root;
}

Complex TrigSum::operator()(double alpha) const {
  Complex acc{};
  if (block_ == 0) {
    for (const auto& [k, c] : coeffs_) acc += c * e_turns(static_cast<long double>(k) * alpha);
    return acc;
  }
  const std::int64_t giants = max_freq_ / block_ + 1;
  std::vector<Complex> baby(static_cast<std::size_t>(block_));
  std::vector<Complex> giant(static_cast<std::size_t>(giants));
  for (std::int64_t j = 0; j < block_; ++j)
    baby[static_cast<std::size_t>(j)] = e_turns(static_cast<long double>(j) * alpha);
  for (std::int64_t i = 0; i < giants; ++i)
    giant[static_cast<std::size_t>(i)] = e_turns(static_cast<long double>(i * block_) * alpha);
  for (const auto& [k, c] : coeffs_)
    acc += c * giant[static_cast<std::size_t>(k / block_)] * baby[static_cast<std::size_t>(k % block_)];
  return acc;
}

Complex line_integral_laplace(Complex s, double a, double D, const QuadratureSpec& quad) {
  if (!(a > 0.0)) throw InvalidArgument("line_integral_laplace needs a > 0");
  if (!(s.real() > 0.0)) throw InvalidArgument("line_integral_laplace needs Re(s) > 0");
  if (D == 0.0) {
    const bool principal = s == Complex{1.0, 0.0};
    if (!principal && !(s.real() > 1.0))
      throw DomainError("for D = 0 the integral converges only for Re(s) > 1 or s = 1");
    // u = a tan(phi), then phi = pi/2 - v^m to tame the endpoint behaviour
    // cos(phi)^{Re s - 2}.
    const double m = principal ? 1.0 : std::max(1.0, std::ceil(2.0 / (s.real() - 1.0)));
    auto f = [s, m](double v) -> Complex {
      const double t = std::pow(v, m);
      const double c = std::sin(t);
      if (c <= 0.0) return 0.0;
      const Complex body = std::exp((s - 2.0) * std::log(c)) * std::cos(s * (0.5 * pi - t));
      return 2.0 * body * m * std::pow(v, m - 1.0);
    };
    const AdaptivePiece piece{0.0, std::pow(0.5 * pi, 1.0 / m), f, 16};
    const auto res = integrate_adaptive({&piece, 1}, quad.abs_tol, std::min(quad.rel_tol, 1e-12));
    return std::exp((1.0 - s) * std::log(a)) * res.value / (2.0 * pi);
  }

  auto g = [s, a](double u) { return std::exp(-s * std::log(Complex{a, u})); };
  const double U = std::max(50.0, 20.0 * (std::abs(s) + 30.0) / std::fabs(D));
  const auto finite = integrate_oscillatory(
      [&](double u) { return std::exp(I * (D * u)) * g(u); }, -U, U,
      std::max(std::fabs(D) / (2.0 * pi), 1.0 / a), quad);

  // Tails by repeated integration by parts:
  // int_U^inf e^{iDu} g = -e^{iDU} sum_j (-1)^j g^(j)(U) / (iD)^{j+1},
  // int_-inf^-U e^{iDu} g = e^{-iDU} sum_j (-1)^j g^(j)(-U) / (iD)^{j+1}.
  auto tail = [&](double u) {
    CompensatedComplexSum acc;
    Complex poch = 1.0;
    Complex ij = 1.0;
    const Complex base{a, u};
    const Complex iD = I * D;
    Complex denom = iD;
    for (int j = 0; j < 60; ++j) {
      const Complex deriv = poch * ij * std::exp((-s - static_cast<double>(j)) * std::log(base));
      const Complex term = (j % 2 == 0 ? 1.0 : -1.0) * deriv / denom;
      acc += term;
      if (std::abs(term) < 1e-18 * std::abs(acc.value())) break;
      poch *= -s - static_cast<double>(j);
      ij *= I;
      denom *= iD;
    }
    return acc.value();
  };
  const Complex upper = -std::exp(I * (D * U)) * tail(U);
  const Complex lower = std::exp(-I * (D * U)) * tail(-U);
  CompensatedComplexSum total;
  total += finite.value;
  total += upper;
  total += lower;
  return total.value() / (2.0 * pi);
}

SegmentCheck laplace_segment_check(double mu, std::uint64_t n, std::uint64_t N,
                                   const QuadratureSpec& quad) {
  if (!(mu > 0.0)) throw InvalidArgument("mu must be positive");
  if (n == 0 || N == 0) throw InvalidArgument("n and N must be positive");
  const double invN = 1.0 / static_cast<double>(N);
  auto f = [&](double alpha) {
    const Complex z{invN, -2.0 * pi * alpha};
    return std::exp(-mu * std::log(z)) * e_turns(-static_cast<long double>(n) * alpha);
  };
  const double freq = static_cast<double>(std::max(n, N));
  const auto res = integrate_oscillatory(f, -0.5, 0.5, freq, quad);
  const double dn = static_cast<double>(n);
  const double closed = std::exp(-dn * invN + (mu - 1.0) * std::log(dn) - std::lgamma(mu));
  return {res.value, closed};
}

double trig_mean_square(std::span<const std::pair<std::int64_t, double>> coeffs, double xi) {
  if (!(xi >= 0.0)) throw InvalidArgument("xi must be nonnegative");
  CompensatedSum acc;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto [ki, ci] = coeffs[i];
    acc += ci * ci * window(0, xi);
    CompensatedSum row;
    for (std::size_t j = i + 1; j < coeffs.size(); ++j)
      row += coeffs[j].second * window(coeffs[j].first - ki, xi);
    acc += 2.0 * ci * row.value();
  }
  return acc.value();
}

MeanSquareReport mean_square_tilde(const ExpSumConfig& cfg, std::uint64_t N, double xi,
                                   const SieveTable& sieve, const QuadratureSpec& quad,
                                   double c1) {
  if (!(xi >= 0.0 && xi <= 0.5)) throw InvalidArgument("xi must lie in [0, 1/2]");
  MeanSquareReport r;
  r.N = N;
  r.ell = cfg.ell;
  r.xi = xi;
  const double L = log_n(N);
  r.bound = std::pow(static_cast<double>(N), 1.0 / cfg.ell) * xi * L * L;
  r.alt_bound = unconditional_shape(N, cfg.ell, c1);
  if (xi == 0.0) return r;

  const TrigSum S(s_tilde_coefficients(cfg, N, sieve));
  const double inv = 1.0 / cfg.ell;
  const Complex lead = cfg.ell == 1 ? Complex{1.0} : std::exp(log_gamma(inv)) * inv;
  const double invN = 1.0 / static_cast<double>(N);
  auto f = [&](double alpha) -> Complex {
    const Complex z{invN, -2.0 * pi * alpha};
    const Complex main = lead * std::exp(-inv * std::log(z));
    return std::norm(S(alpha) - main);
  };
  // The integrand is even in alpha.
  const auto res =
      integrate_oscillatory(f, 0.0, xi, static_cast<double>(S.max_frequency()), quad);
  r.integral = 2.0 * res.value.real();
  r.ratio = r.integral / r.bound;
  return r;
}

MeanSquareReport mean_square_classical(const ExpSumConfig& cfg, std::uint64_t N, double xi,
                                       const SieveTable& sieve) {
  if (cfg.ell == 0) throw InvalidArgument("ell must be positive");
  if (N == 0) throw InvalidArgument("N must be positive");
  const double dN = static_cast<double>(N);
  if (!(xi >= 0.5 / dN && xi <= 0.5)) throw InvalidArgument("xi must lie in [1/(2N), 1/2]");
  if (sieve.limit() < N) throw OutOfRange("sieve must reach N=" + std::to_string(N));
  MeanSquareReport r;
  r.N = N;
  r.ell = cfg.ell;
  r.xi = xi;
  r.range_warning = xi > 0.5 * std::pow(dN, 1.0 / cfg.ell - 1.0) * (1.0 + 1e-12);
  std::vector<std::pair<std::int64_t, double>> coeffs;
  coeffs.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n)
    coeffs.emplace_back(int_power(n, cfg.ell), sieve.lambda(n) - 1.0);
  r.integral = trig_mean_square(coeffs, xi);
  const double L = log_n(N);
  r.bound = std::pow(dN, 1.0 / cfg.ell) * xi * L * L +
            std::pow(dN, 2.0 / cfg.ell - 2.0) * L * L / xi;
  if (cfg.ell == 1) {
    const double lg = std::log(3.0 * xi);
    const double first = lg == 0.0 ? std::numeric_limits<double>::infinity() : L * L / (xi * lg * lg);
    r.alt_bound = dN * xi * L * L + std::min(first, dN * xi * L * L * L * L);
  }
  r.ratio = r.integral / r.bound;
  return r;
}

double classical_full_period_mean_square(const ExpSumConfig& cfg, std::uint64_t N,
                                         const SieveTable& sieve, const QuadratureSpec& quad) {
  if (sieve.limit() < N) throw OutOfRange("sieve must reach N=" + std::to_string(N));
  std::vector<std::pair<std::int64_t, double>> coeffs;
  for (std::uint32_t n : sieve.prime_powers()) {
    if (n > N) break;
    coeffs.emplace_back(int_power(n, cfg.ell), sieve.lambda(n));
  }
  const TrigSum S(std::move(coeffs));
  const auto res = integrate_oscillatory([&](double a) -> Complex { return std::norm(S(a)); }, -0.5,
                                         0.5, static_cast<double>(S.max_frequency()), quad);
  return res.value.real();
}

MeanSquareReport omega_mean_square(const ExpSumConfig& cfg, std::uint64_t N, double xi,
                                   const SieveTable& sieve) {
  if (cfg.ell < 2) throw InvalidArgument("omega_mean_square needs ell >= 2");
  if (!(xi > 0.0 && xi <= 0.5)) throw InvalidArgument("xi must lie in (0, 1/2]");
  const std::uint64_t top = n_max(cfg, N);
  const double invN = 1.0 / static_cast<double>(N);
  std::vector<std::pair<std::int64_t, double>> w;
  for (std::uint64_t m = 1; m <= top; ++m) {
    const std::int64_t k = int_power(m, cfg.ell);
    w.emplace_back(k, std::exp(-static_cast<double>(k) * invN));
  }
  MeanSquareReport r;
  r.N = N;
  r.ell = cfg.ell;
  r.xi = xi;
  r.integral = trig_mean_square(w, xi);
  r.companion_integral = trig_mean_square(s_tilde_coefficients(cfg, N, sieve), xi);
  const double L = log_n(N);
  const double scale = xi * std::pow(static_cast<double>(N), 1.0 / cfg.ell);
  r.bound = scale + (cfg.ell == 2 ? L : 1.0);
  r.companion_bound = scale * L + (cfg.ell == 2 ? L * L : 1.0);
  r.ratio = r.integral / r.bound;
  return r;
}

MeanSquareReport fourth_moment(std::uint64_t N, const SieveTable& sieve) {
  if (N < 100) throw InvalidArgument("fourth_moment needs N >= 100");
  const ExpSumConfig cfg{2};
  const auto coeffs = s_tilde_coefficients(cfg, N, sieve);
  const std::int64_t top = coeffs.back().first;

  // |S~_2|^4 has frequencies up to 4 top; a grid of more points is exact.
  std::size_t M = 1;
  while (M <= static_cast<std::size_t>(4 * top)) M <<= 1;
  std::vector<std::pair<std::int64_t, Complex>> terms(coeffs.begin(), coeffs.end());
  const auto values = trig_poly_on_grid(terms, M);
  CompensatedSum acc;
  for (const auto& v : values) {
    const double a2 = std::norm(v);
    acc += a2 * a2;
  }

  std::vector<double> pair_weight(static_cast<std::size_t>(2 * top + 1), 0.0);
  for (const auto& [k1, c1] : coeffs)
    for (const auto& [k2, c2] : coeffs) pair_weight[static_cast<std::size_t>(k1 + k2)] += c1 * c2;
  CompensatedSum parseval;
  for (double b : pair_weight) parseval += b * b;

  MeanSquareReport r;
  r.N = N;
  r.ell = 2;
  r.xi = 0.5;
  r.integral = acc.value() / static_cast<double>(M);
  r.companion_integral = parseval.value();
  const double L = log_n(N);
  r.bound = static_cast<double>(N) * L * L;
  r.ratio = r.integral / r.bound;
  return r;
}

}  // namespace primesums
