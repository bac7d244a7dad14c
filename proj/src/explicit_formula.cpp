#include "primesums/explicit_formula.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "primesums/analysis.hpp"
#include "primesums/errors.hpp"
#include "primesums/expsum.hpp"
#include "primesums/special.hpp"
#include "primesums/summation.hpp"

namespace primesums {

namespace {

using std::numbers::pi;

double top_height(ZeroView zeros) { return zeros.empty() ? 0.0 : zeros.back(); }

FormulaReport start(ProblemKind kind, std::uint64_t N, ZeroView zeros) {
  if (N == 0) throw InvalidArgument("N must be positive");
  FormulaReport r;
  r.problem = kind;
  r.N = N;
  r.T = top_height(zeros);
  return r;
}

// Sum over all rho (both signs of gamma) of exp(log_term(rho)); stores the
// real part under `name` and records the imaginary part.
void store_zero_sum(FormulaReport& r, const std::string& name, double scale, ZeroView zeros,
                    const std::function<Complex(Complex)>& log_term) {
  const Complex s = two_sided_sum(zeros, [&](Complex rho) { return std::exp(log_term(rho)); });
  r.terms[name] = scale * s.real();
  r.discarded_imag[name] = scale * s.imag();
}

}  // namespace

double FormulaReport::term(const std::string& name) const {
  const auto it = terms.find(name);
  return it == terms.end() ? 0.0 : it->second;
}

void FormulaReport::finish() {
  CompensatedSum rhs;
  for (const char* name : kTermNames) {
    const auto it = terms.find(name);
    if (it != terms.end()) rhs += it->second;
  }
  residual = lhs - rhs.value();
  ratio = reference_bound > 0.0 ? std::fabs(residual) / reference_bound : 0.0;
}

FormulaReport goldbach_average(std::uint64_t N, ZeroView zeros, const SieveTable& sieve) {
  auto r = start(ProblemKind::GOLDBACH, N, zeros);
  const double dN = static_cast<double>(N);
  const double L = std::log(dN);
  r.lhs = cumulative_sum(ProblemKind::GOLDBACH, N, sieve);
  r.terms["main"] = 0.5 * dN * dN;
  store_zero_sum(r, "zero_sum_1", -2.0, zeros, [L](Complex rho) {
    return (rho + 1.0) * L - std::log(rho * (rho + 1.0));
  });
  r.reference_bound = dN * L * L * L;
  r.finish();
  return r;
}

FormulaReport goldbach_cesaro(std::uint64_t N, double k, ZeroView zeros, const SieveTable& sieve,
                              double T2) {
  if (!(k > 0.5))
    throw InvalidArgument("Cesaro order k must exceed 1/2 for the double zero sum to converge");
  auto r = start(ProblemKind::GOLDBACH, N, zeros);
  r.k = k;
  r.outside_proven_range = k <= 1.0;
  const double dN = static_cast<double>(N);
  const double L = std::log(dN);
  r.lhs = cesaro_sum(ProblemKind::GOLDBACH, N, k, sieve);
  r.terms["main"] = std::exp(2.0 * L - std::lgamma(k + 3.0));
  store_zero_sum(r, "zero_sum_1", -2.0, zeros, [&](Complex rho) {
    return log_gamma(rho) - log_gamma(rho + k + 2.0) + (rho + 1.0) * L;
  });

  // Pairs with gamma_1, gamma_2 > 0; the other two sign patterns are the
  // complex conjugates of these two.
  const ZeroView pair_zeros = truncate(zeros, T2);
  std::vector<Complex> lg(pair_zeros.size());
  for (std::size_t i = 0; i < pair_zeros.size(); ++i) lg[i] = log_gamma(rho_of(pair_zeros[i]));
  CompensatedSum total, tail;
  for (std::size_t i = 0; i < pair_zeros.size(); ++i) {
    const Complex r1 = rho_of(pair_zeros[i]);
    CompensatedSum row, row_tail;
    for (std::size_t j = 0; j < pair_zeros.size(); ++j) {
      const Complex r2 = rho_of(pair_zeros[j]);
      const Complex same = lg[i] + lg[j] - log_gamma(r1 + r2 + k + 1.0) + (r1 + r2) * L;
      const Complex r2c = std::conj(r2);
      const Complex cross =
          lg[i] + std::conj(lg[j]) - log_gamma(r1 + r2c + k + 1.0) + (r1 + r2c) * L;
      const double v = 2.0 * (std::exp(same) + std::exp(cross)).real();
      row += v;
      if (std::max(pair_zeros[i], pair_zeros[j]) > 0.5 * T2) row_tail += v;
    }
    total += row.value();
    tail += row_tail.value();
  }
  r.terms["double_zero_sum"] = total.value();
  r.double_sum_tail = tail.value();
  r.reference_bound = dN;
  r.finish();
  return r;
}

FormulaReport goldston_yang(std::uint64_t N, ZeroView zeros, const SieveTable& sieve) {
  auto r = start(ProblemKind::GOLDBACH, N, zeros);
  r.k = 1.0;
  const double dN = static_cast<double>(N);
  const double L = std::log(dN);
  r.lhs = goldbach_linear_weighted_sum(N, sieve);
  r.terms["main"] = dN * dN / 6.0;
  store_zero_sum(r, "zero_sum_1", -2.0, zeros, [L](Complex rho) {
    return (rho + 1.0) * L - std::log(rho * (rho + 1.0) * (rho + 2.0));
  });
  r.reference_bound = dN;
  r.finish();
  return r;
}

FormulaReport hl_cesaro(std::uint64_t N, double k, ZeroView zeros, const SieveTable& sieve,
                        unsigned l_max) {
  if (!(k > 0.0)) throw InvalidArgument("Cesaro order k must be positive");
  if (l_max == 0) throw InvalidArgument("l_max must be at least 1");
  auto r = start(ProblemKind::HL, N, zeros);
  r.k = k;
  r.outside_proven_range = k <= 1.0;
  const double dN = static_cast<double>(N);
  const double L = std::log(dN);
  const double log_pi = std::log(pi);
  const double root = std::sqrt(dN);
  r.lhs = cesaro_sum(ProblemKind::HL, N, k, sieve);
  r.terms["main"] = 0.5 * std::sqrt(pi) * std::exp(1.5 * L - std::lgamma(k + 2.5));
  r.terms["secondary_main"] = -0.5 * std::exp(L - std::lgamma(k + 2.0));
  store_zero_sum(r, "zero_sum_1", -0.5 * std::sqrt(pi), zeros, [&](Complex rho) {
    return log_gamma(rho) - log_gamma(k + 1.5 + rho) + (0.5 + rho) * L;
  });
  store_zero_sum(r, "zero_sum_2", 0.5, zeros, [&](Complex rho) {
    return log_gamma(rho) - log_gamma(k + 1.0 + rho) + rho * L;
  });

  std::vector<double> us(l_max);
  for (unsigned l = 1; l <= l_max; ++l) us[l - 1] = 2.0 * pi * l * root;

  // J_nu(2 pi l sqrt N) / l^nu = (pi sqrt N)^nu / Gamma(nu+1) * F_nu(2 pi l sqrt N),
  // with F_nu the reduced function, so l drops out of the prefactor.
  const double nu = k + 1.5;
  const auto F = bessel_j_reduced_sweep(nu, us);
  CompensatedSum bessel;
  for (const auto& f : F) bessel += f.real();
  const double log_pref = (0.75 - 0.5 * k) * L - (k + 1.0) * log_pi;
  r.terms["bessel_sum"] =
      std::exp(log_pref + nu * (log_pi + 0.5 * L) - std::lgamma(nu + 1.0)) * bessel.value();
  r.bessel_tail_estimate = std::exp(log_pref) * std::pow(static_cast<double>(l_max), 1.0 - nu) /
                           (nu - 1.0);

  CompensatedSum bz;
  for (double g : zeros) {
    const Complex rho = rho_of(g);
    const Complex nu_rho = k + 0.5 + rho;
    std::vector<Complex> Fr;
    try {
      Fr = bessel_j_reduced_sweep(nu_rho, us);
    } catch (const AccuracyError& e) {
      throw AccuracyError("Bessel evaluation failed at gamma=" + std::to_string(g) + ", l in [1, " +
                              std::to_string(l_max) + "]: " + e.what(),
                          e.achieved_estimate);
    }
    CompensatedComplexSum inner;
    for (const auto& f : Fr) inner += f;
    const Complex logc = log_gamma(rho) + rho * (0.5 * L - log_pi) +
                         nu_rho * (log_pi + 0.5 * L) - log_gamma(nu_rho + 1.0);
    bz += 2.0 * (std::exp(logc) * inner.value()).real();
  }
  r.terms["bessel_zero_sum"] = -std::exp((0.25 - 0.5 * k) * L - k * log_pi) * bz.value();
  r.reference_bound = root;
  r.finish();
  return r;
}

double short_interval_main(ProblemKind kind, std::uint64_t N, std::uint64_t H) {
  const double dN = static_cast<double>(N);
  const double dH = static_cast<double>(H);
  switch (kind) {
    case ProblemKind::HUA: return 0.25 * pi * dH * dN;
    case ProblemKind::P1P2SQ: return dH * std::sqrt(dN);
    case ProblemKind::TWO_PSQ:
    case ProblemKind::PSQ_SQ: return 0.25 * pi * dH;
    default: throw InvalidArgument("no short-interval formula for " + std::string(to_string(kind)));
  }
}

double short_interval_bound(ProblemKind kind, std::uint64_t N, std::uint64_t H) {
  const double dN = static_cast<double>(N);
  const double dH = static_cast<double>(H);
  const double L = std::log(dN);
  switch (kind) {
    case ProblemKind::HUA:
      return std::sqrt(dH) * dN * L * L + dH * std::pow(dN, 0.75) * L * L * L +
             dH * dH * std::pow(L, 1.5);
    case ProblemKind::P1P2SQ:
      return dH * dH / std::sqrt(dN) + std::pow(dN, 0.75) * L * L * L +
             dH * std::cbrt(dN) * L * L;
    case ProblemKind::TWO_PSQ:
      return dH * dH / dN + std::sqrt(dH) * std::pow(dN, 0.25) * std::pow(L, 1.5);
    case ProblemKind::PSQ_SQ: return dH * dH / dN + dH * std::log(L) / std::sqrt(L);
    default: throw InvalidArgument("no short-interval formula for " + std::string(to_string(kind)));
  }
}

FormulaReport short_interval_report(ProblemKind kind, std::uint64_t N, std::uint64_t H,
                                    const SieveTable& sieve) {
  FormulaReport r;
  r.problem = kind;
  r.N = N;
  r.H = H;
  r.terms["main"] = short_interval_main(kind, N, H);
  r.reference_bound = short_interval_bound(kind, N, H);
  r.lhs = short_interval_sum(kind, N, H, sieve);
  r.finish();
  return r;
}

std::map<std::string, double> circle_decomposition_diag(std::uint64_t N, std::uint64_t H,
                                                        const SieveTable& sieve,
                                                        const QuadratureSpec& quad,
                                                        bool with_split) {
  if (N == 0 || H == 0) throw InvalidArgument("N and H must be positive");
  if (H >= N) throw InvalidArgument("circle decomposition needs H < N");
  const ExpSumConfig cfg{};
  const auto coeffs = s_tilde_coefficients(cfg, N, sieve);
  const std::int64_t top = coeffs.back().first;
  const auto iN = static_cast<std::int64_t>(N);
  const auto iH = static_cast<std::int64_t>(H);

  // S~^2 K has frequencies in [-(N+H), 2 top]; a larger grid is exact.
  std::size_t M = 1;
  while (M <= static_cast<std::size_t>(2 * top + iN + iH)) M <<= 1;
  std::vector<std::pair<std::int64_t, Complex>> terms(coeffs.begin(), coeffs.end());
  const auto S = trig_poly_on_grid(terms, M);
  CompensatedComplexSum total;
  for (std::size_t j = 0; j < M; ++j) {
    const long double alpha = static_cast<long double>(j) / static_cast<long double>(M);
    const Complex K = e_turns(-static_cast<long double>(iN) * alpha) *
                      std::conj(u_sum(static_cast<double>(alpha), H));
    total += S[j] * S[j] * K;
  }
  const double total_value = total.value().real() / static_cast<double>(M);

  const double invN = 1.0 / static_cast<double>(N);
  auto main_integrand = [&](double alpha) {
    const Complex z{invN, -2.0 * pi * alpha};
    const Complex K = e_turns(-static_cast<long double>(iN) * alpha) * std::conj(u_sum(alpha, H));
    return K / (z * z);
  };
  const auto main = integrate_oscillatory(main_integrand, -0.5, 0.5,
                                          static_cast<double>(iN + iH), quad);

  std::map<std::string, double> out;
  out["total"] = total_value;
  out["main_integral"] = main.value.real();
  out["rest_integral"] = total_value - main.value.real();
  out["direct"] = exp_weighted_short_sum(N, H, sieve);
  if (with_split) {
    const double dH = static_cast<double>(H);
    out["split_near"] = dH * mean_square_tilde(cfg, N, 1.0 / dH, sieve, quad).integral;
    const TrigSum St(coeffs);
    auto far = [&](double alpha) -> Complex {
      const Complex z{invN, -2.0 * pi * alpha};
      return std::norm(St(alpha) - 1.0 / z) / alpha;
    };
    out["split_far"] =
        integrate_oscillatory(far, 1.0 / dH, 0.5, static_cast<double>(top), quad).value.real();
  }
  return out;
}

}  // namespace primesums
