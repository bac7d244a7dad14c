#include "primesums/expsum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "primesums/errors.hpp"
#include "primesums/special.hpp"
#include "primesums/summation.hpp"

namespace primesums {

namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

long double ipow(std::uint64_t n, unsigned ell) {
  long double r = 1.0L;
  for (unsigned i = 0; i < ell; ++i) r *= static_cast<long double>(n);
  return r;
}

void check_config(const ExpSumConfig& cfg) {
  if (cfg.ell == 0) throw InvalidArgument("ell must be a positive integer");
  if (!(cfg.tail_epsilon > 0.0 && cfg.tail_epsilon < 1.0))
    throw InvalidArgument("tail_epsilon must lie in (0, 1)");
}

void check_segment(const ComplexParam& p, const char* what) {
  if (p.vertical)
    throw InvalidArgument(std::string(what) + " is defined on the alpha segment only");
}

}  // namespace

ComplexParam ComplexParam::segment(std::uint64_t N, double alpha) {
  if (N == 0) throw InvalidArgument("N must be positive");
  if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  ComplexParam p;
  p.N = N;
  p.z = {1.0 / static_cast<double>(N), -2.0 * std::numbers::pi * alpha};
  p.turns = alpha;
  return p;
}

ComplexParam ComplexParam::vertical_line(std::uint64_t N, double y) {
  if (N == 0) throw InvalidArgument("N must be positive");
  if (!std::isfinite(y)) throw InvalidArgument("y must be finite");
  ComplexParam p;
  p.N = N;
  p.z = {1.0 / static_cast<double>(N), y};
  p.turns = -static_cast<long double>(y) / kTwoPiL;
  p.vertical = true;
  return p;
}

std::uint64_t n_max(const ExpSumConfig& cfg, std::uint64_t N) {
  check_config(cfg);
  if (N == 0) throw InvalidArgument("N must be positive");
  const long double cut = static_cast<long double>(N) * std::log(1.0L / cfg.tail_epsilon);
  auto n = static_cast<std::uint64_t>(std::pow(cut, 1.0L / cfg.ell));
  while (n > 1 && ipow(n - 1, cfg.ell) > cut) --n;
  while (ipow(n, cfg.ell) <= cut) ++n;
  return n;
}

Complex e_turns(long double x) {
  const long double r = x - std::roundl(x);
  const double angle = static_cast<double>(kTwoPiL * r);
  return {std::cos(angle), std::sin(angle)};
}

Complex s_tilde(const ExpSumConfig& cfg, const ComplexParam& p, const SieveTable& sieve) {
  const std::uint64_t top = n_max(cfg, p.N);
  if (sieve.limit() < top)
    throw OutOfRange("s_tilde needs the sieve up to n_max=" + std::to_string(top) + ", have " +
                     std::to_string(sieve.limit()));
  const long double invN = 1.0L / static_cast<long double>(p.N);
  CompensatedComplexSum acc;
  for (std::uint32_t n : sieve.prime_powers()) {
    if (n > top) break;
    const long double m = ipow(n, cfg.ell);
    const double weight = sieve.lambda(n) * static_cast<double>(std::exp(-m * invN));
    acc += weight * e_turns(m * p.turns);
  }
  return acc.value();
}

Complex s_classical(const ExpSumConfig& cfg, const ComplexParam& p, const SieveTable& sieve) {
  check_config(cfg);
  check_segment(p, "s_classical");
  if (sieve.limit() < p.N)
    throw OutOfRange("s_classical needs the sieve up to N=" + std::to_string(p.N));
  CompensatedComplexSum acc;
  for (std::uint32_t n : sieve.prime_powers()) {
    if (n > p.N) break;
    acc += sieve.lambda(n) * e_turns(ipow(n, cfg.ell) * p.turns);
  }
  return acc.value();
}

Complex t_sum(const ExpSumConfig& cfg, const ComplexParam& p) {
  check_config(cfg);
  check_segment(p, "t_sum");
  CompensatedComplexSum acc;
  for (std::uint64_t n = 1; n <= p.N; ++n) acc += e_turns(ipow(n, cfg.ell) * p.turns);
  return acc.value();
}

Complex t_sum_powers(const ExpSumConfig& cfg, const ComplexParam& p) {
  check_config(cfg);
  check_segment(p, "t_sum_powers");
  const auto N = static_cast<long double>(p.N);
  CompensatedComplexSum acc;
  for (std::uint64_t m = 1;; ++m) {
    const long double mm = ipow(m, cfg.ell);
    if (mm > N) break;
    acc += e_turns(mm * p.turns);
  }
  return acc.value();
}

Complex omega(const ExpSumConfig& cfg, const ComplexParam& p) {
  const std::uint64_t top = n_max(cfg, p.N);
  const long double invN = 1.0L / static_cast<long double>(p.N);
  CompensatedComplexSum acc;
  for (std::uint64_t m = 1; m <= top; ++m) {
    const long double mm = ipow(m, cfg.ell);
    acc += static_cast<double>(std::exp(-mm * invN)) * e_turns(mm * p.turns);
  }
  return acc.value();
}

Complex u_sum(double alpha, std::uint64_t H) {
  if (H == 0) throw InvalidArgument("H must be at least 1");
  const long double r = alpha - std::roundl(alpha);
  if (r == 0.0L) return static_cast<double>(H);
  const long double h = static_cast<long double>(H);
  const long double pi = std::numbers::pi_v<long double>;
  const double ratio = static_cast<double>(std::sin(pi * h * r) / std::sin(pi * r));
  return ratio * e_turns(0.5L * (h + 1.0L) * r);
}

Complex f2(std::uint64_t N, double alpha) {
  if (N == 0) throw InvalidArgument("N must be positive");
  CompensatedComplexSum acc;
  for (std::uint64_t m = 1; m <= N; ++m)
    acc += e_turns(static_cast<long double>(m) * alpha) / std::sqrt(static_cast<double>(m));
  return 0.5 * acc.value();
}

Complex linnik_main(const ExpSumConfig& cfg, const ComplexParam& p) {
  check_config(cfg);
  if (cfg.ell == 1) return 1.0 / p.z;
  const double inv = 1.0 / cfg.ell;
  return std::exp(log_gamma(inv) - inv * std::log(p.z)) * inv;
}

Complex linnik_approx(const ExpSumConfig& cfg, const ComplexParam& p, ZeroView zeros) {
  const Complex main = linnik_main(cfg, p);
  const double inv = 1.0 / cfg.ell;
  const Complex logz = std::log(p.z);
  const Complex zsum = two_sided_sum(zeros, [&](Complex rho) {
    const Complex w = rho * inv;
    return std::exp(log_gamma(w) - w * logz);
  });
  return main - inv * zsum;
}

Complex linnik_vertical(std::uint64_t N, double y, ZeroView zeros, const SieveTable& sieve) {
  const auto p = ComplexParam::vertical_line(N, y);
  const ExpSumConfig cfg{};
  const Complex logz = std::log(p.z);
  const Complex zsum = two_sided_sum(
      zeros, [&](Complex rho) { return std::exp(log_gamma(rho) - rho * logz); });
  CompensatedComplexSum acc;
  acc += s_tilde(cfg, p, sieve);
  acc += -1.0 / p.z;
  acc += zsum;
  return acc.value();
}

std::vector<std::pair<std::int64_t, double>> s_tilde_coefficients(const ExpSumConfig& cfg,
                                                                  std::uint64_t N,
                                                                  const SieveTable& sieve) {
  const std::uint64_t top = n_max(cfg, N);
  if (sieve.limit() < top)
    throw OutOfRange("s_tilde needs the sieve up to n_max=" + std::to_string(top));
  const long double invN = 1.0L / static_cast<long double>(N);
  std::vector<std::pair<std::int64_t, double>> out;
  for (std::uint32_t n : sieve.prime_powers()) {
    if (n > top) break;
    const long double m = ipow(n, cfg.ell);
    out.emplace_back(static_cast<std::int64_t>(m),
                     sieve.lambda(n) * static_cast<double>(std::exp(-m * invN)));
  }
  return out;
}

}  // namespace primesums
