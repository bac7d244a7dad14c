#include "primesums/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "primesums/errors.hpp"
#include "primesums/summation.hpp"

namespace primesums {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void require_limit(ProblemKind kind, std::uint64_t n, const SieveTable& sieve) {
  const auto need = required_sieve_limit(kind, n);
  if (need > sieve.limit()) {
    throw OutOfRange(std::string(to_string(kind)) + " at n=" + std::to_string(n) +
                     " needs a sieve limit of at least " + std::to_string(need) +
                     " (have " + std::to_string(sieve.limit()) + ")");
  }
}

// Weighted count with compensated accumulation in ascending order of the
// first summand.
double count_goldbach(std::uint64_t n, const SieveTable& s) {
  CompensatedSum acc;
  for (auto m1 : s.prime_powers()) {
    if (m1 >= n) break;
    const double l2 = s.lambda(n - m1);
    if (l2 > 0.0) acc += s.lambda(m1) * l2;
  }
  return acc.value();
}

double count_hl(std::uint64_t n, const SieveTable& s) {
  CompensatedSum acc;
  for (std::uint64_t m = 1; m * m < n; ++m) acc += s.lambda(n - m * m);
  return acc.value();
}

double count_hua(std::uint64_t n, const SieveTable& s) {
  CompensatedSum acc;
  for (auto p2 : s.primes()) {
    const std::uint64_t q2 = std::uint64_t{p2} * p2;
    if (q2 + 4 >= n) break;
    const double w2 = s.lambda(p2);
    for (auto p3 : s.primes()) {
      const std::uint64_t q = q2 + std::uint64_t{p3} * p3;
      if (q >= n) break;
      const std::uint64_t p1 = n - q;
      if (s.is_prime(p1)) acc += s.lambda(p1) * w2 * s.lambda(p3);
    }
  }
  return acc.value();
}

double count_p1p2sq(std::uint64_t n, const SieveTable& s) {
  CompensatedSum acc;
  for (auto p2 : s.primes()) {
    const std::uint64_t q = std::uint64_t{p2} * p2;
    if (q >= n) break;
    if (s.is_prime(n - q)) acc += s.lambda(n - q) * s.lambda(p2);
  }
  return acc.value();
}

double count_two_psq(std::uint64_t n, const SieveTable& s) {
  CompensatedSum acc;
  for (auto p1 : s.primes()) {
    const std::uint64_t q = std::uint64_t{p1} * p1;
    if (q >= n) break;
    const std::uint64_t rest = n - q;
    const std::uint64_t r = isqrt(rest);
    if (r * r == rest && s.is_prime(r)) acc += s.lambda(p1) * s.lambda(r);
  }
  return acc.value();
}

double count_psq_sq(std::uint64_t n, const SieveTable& s) {
  CompensatedSum acc;
  for (auto p : s.primes()) {
    const std::uint64_t q = std::uint64_t{p} * p;
    if (q >= n) break;
    const std::uint64_t rest = n - q;
    const std::uint64_t r = isqrt(rest);
    if (r * r == rest) acc += s.lambda(p);
  }
  return acc.value();
}

double count_unchecked(ProblemKind kind, std::uint64_t n, const SieveTable& s) {
  switch (kind) {
    case ProblemKind::GOLDBACH: return count_goldbach(n, s);
    case ProblemKind::HL: return count_hl(n, s);
    case ProblemKind::HUA: return count_hua(n, s);
    case ProblemKind::P1P2SQ: return count_p1p2sq(n, s);
    case ProblemKind::TWO_PSQ: return count_two_psq(n, s);
    case ProblemKind::PSQ_SQ: return count_psq_sq(n, s);
  }
  return 0.0;
}

// sum over ordered pairs with m1 + m2 <= N (GOLDBACH) or m1 + m2^2 <= N (HL)
// of L(m1) L(m2) weight(m1 + m2) (resp. L(m1) weight(m1 + m2^2)).
template <class Weight>
double pair_sum(ProblemKind kind, std::uint64_t N, const SieveTable& s, Weight&& weight) {
  CompensatedSum acc;
  if (kind == ProblemKind::GOLDBACH) {
    for (auto m1 : s.prime_powers()) {
      if (m1 >= N) break;
      const double l1 = s.lambda(m1);
      for (auto m2 : s.prime_powers()) {
        const std::uint64_t n = std::uint64_t{m1} + m2;
        if (n > N) break;
        acc += l1 * s.lambda(m2) * weight(n);
      }
    }
  } else {
    for (auto m1 : s.prime_powers()) {
      if (m1 >= N) break;
      const double l1 = s.lambda(m1);
      for (std::uint64_t m = 1;; ++m) {
        const std::uint64_t n = m1 + m * m;
        if (n > N) break;
        acc += l1 * weight(n);
      }
    }
  }
  return acc.value();
}

}  // namespace

SieveTable::SieveTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw InvalidArgument("sieve limit must be at least 2, got " + std::to_string(limit));
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("sieve limit above 2^32 is not supported");
  lambda_.assign(limit + 1, 0.0);
  is_prime_.assign(limit + 1, 1);
  is_prime_[0] = 0;
  is_prime_[1] = 0;
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (!is_prime_[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) is_prime_[m] = 0;
  }
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (!is_prime_[p]) continue;
    primes_.push_back(static_cast<std::uint32_t>(p));
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p; q <= limit; q *= p) {
      lambda_[q] = lp;
      if (q > limit / p) break;
    }
  }
  for (std::uint64_t n = 2; n <= limit; ++n)
    if (lambda_[n] > 0.0) prime_powers_.push_back(static_cast<std::uint32_t>(n));
}

double SieveTable::psi(std::uint64_t x) const {
  x = std::min(x, limit_);
  CompensatedSum acc;
  for (auto m : prime_powers_) {
    if (m > x) break;
    acc += lambda_[m];
  }
  return acc.value();
}

SieveTable build_sieve(std::uint64_t limit) { return SieveTable(limit); }

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::GOLDBACH: return "GOLDBACH";
    case ProblemKind::HL: return "HL";
    case ProblemKind::HUA: return "HUA";
    case ProblemKind::P1P2SQ: return "P1P2SQ";
    case ProblemKind::TWO_PSQ: return "TWO_PSQ";
    case ProblemKind::PSQ_SQ: return "PSQ_SQ";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto kind : kAllProblemKinds)
    if (to_string(kind) == upper) return kind;
  throw InvalidArgument("unknown problem kind '" + std::string(name) + "'");
}

std::uint64_t required_sieve_limit(ProblemKind kind, std::uint64_t n) {
  switch (kind) {
    case ProblemKind::GOLDBACH:
    case ProblemKind::HL:
    case ProblemKind::HUA:
    case ProblemKind::P1P2SQ:
      return std::max<std::uint64_t>(2, n);
    case ProblemKind::TWO_PSQ:
    case ProblemKind::PSQ_SQ:
      return std::max<std::uint64_t>(2, isqrt(n));
  }
  return n;
}

double representation_count(ProblemKind kind, std::uint64_t n, const SieveTable& sieve) {
  if (n == 0) throw InvalidArgument("n must be positive");
  require_limit(kind, n, sieve);
  return count_unchecked(kind, n, sieve);
}

double cumulative_sum(ProblemKind kind, std::uint64_t N, const SieveTable& sieve) {
  if (N == 0) throw InvalidArgument("N must be positive");
  require_limit(kind, N, sieve);
  if (kind == ProblemKind::GOLDBACH || kind == ProblemKind::HL)
    return pair_sum(kind, N, sieve, [](std::uint64_t) { return 1.0; });
  CompensatedSum acc;
  for (std::uint64_t n = 1; n <= N; ++n) acc += count_unchecked(kind, n, sieve);
  return acc.value();
}

double short_interval_sum(ProblemKind kind, std::uint64_t N, std::uint64_t H,
                          const SieveTable& sieve) {
  if (H == 0) throw InvalidArgument("interval length H must be at least 1");
  if (N > std::numeric_limits<std::uint64_t>::max() - H)
    throw OutOfRange("N + H overflows");
  require_limit(kind, N + H, sieve);
  CompensatedSum acc;
  for (std::uint64_t n = N + 1; n <= N + H; ++n) acc += count_unchecked(kind, n, sieve);
  return acc.value();
}

double cesaro_sum(ProblemKind kind, std::uint64_t N, double k, const SieveTable& sieve) {
  if (!(k > 0.0)) throw InvalidArgument("Cesaro order k must be positive");
  if (N == 0) throw InvalidArgument("N must be positive");
  require_limit(kind, N, sieve);
  const double norm = std::tgamma(k + 1.0);
  const double dN = static_cast<double>(N);
  std::vector<double> w(N + 1);
  for (std::uint64_t n = 0; n <= N; ++n)
    w[n] = std::pow(static_cast<double>(N - n) / dN, k) / norm;
  if (kind == ProblemKind::GOLDBACH || kind == ProblemKind::HL)
    return pair_sum(kind, N, sieve, [&](std::uint64_t n) { return w[n]; });
  CompensatedSum acc;
  for (std::uint64_t n = 1; n < N; ++n) acc += count_unchecked(kind, n, sieve) * w[n];
  return acc.value();
}

double goldbach_linear_weighted_sum(std::uint64_t N, const SieveTable& sieve) {
  if (N == 0) throw InvalidArgument("N must be positive");
  require_limit(ProblemKind::GOLDBACH, N, sieve);
  const double dN = static_cast<double>(N);
  return pair_sum(ProblemKind::GOLDBACH, N, sieve,
                  [&](std::uint64_t n) { return 1.0 - static_cast<double>(n) / dN; });
}

double exp_weighted_short_sum(std::uint64_t N, std::uint64_t H, const SieveTable& sieve) {
  if (H == 0) throw InvalidArgument("interval length H must be at least 1");
  if (N == 0) throw InvalidArgument("N must be positive");
  if (N > std::numeric_limits<std::uint64_t>::max() - H) throw OutOfRange("N + H overflows");
  require_limit(ProblemKind::GOLDBACH, N + H, sieve);
  const double dN = static_cast<double>(N);
  CompensatedSum acc;
  for (std::uint64_t n = N + 1; n <= N + H; ++n)
    acc += std::exp(-static_cast<double>(n) / dN) * count_goldbach(n, sieve);
  return acc.value();
}

}  // namespace primesums
