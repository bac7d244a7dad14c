#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace primesums {

/// von Mangoldt values and primality flags for 1..limit.
///
/// Immutable after construction. lambda(p^k) is the double log(p) computed
/// once per prime and copied to every power, so lambda(p^k) == lambda(p)
/// bit for bit.
class SieveTable {
 public:
  explicit SieveTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  double lambda(std::uint64_t n) const { return lambda_[n]; }
  bool is_prime(std::uint64_t n) const { return is_prime_[n] != 0; }
  /// log p if n is prime, else 0.
  double theta_weight(std::uint64_t n) const { return is_prime_[n] ? lambda_[n] : 0.0; }

  /// Index 0 is unused and holds 0.
  std::span<const double> lambdas() const { return lambda_; }
  /// Ascending primes up to limit.
  std::span<const std::uint32_t> primes() const { return primes_; }
  /// Ascending prime powers up to limit (n with lambda(n) > 0).
  std::span<const std::uint32_t> prime_powers() const { return prime_powers_; }

  /// Chebyshev psi(x) = sum_{n <= x} lambda(n), compensated, ascending n.
  double psi(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<double> lambda_;
  std::vector<std::uint8_t> is_prime_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> prime_powers_;
};

/// Throws InvalidArgument when limit < 2.
SieveTable build_sieve(std::uint64_t limit);

/// The six representation problems:
///   GOLDBACH  R_G(n)     = sum_{m1+m2=n} L(m1) L(m2)
///   HL        R_HL(n)    = sum_{m1+m2^2=n, m2>=1} L(m1)
///   HUA       r(n)       = sum_{p1+p2^2+p3^2=n} log p1 log p2 log p3
///   P1P2SQ    r''_{1,2}  = sum_{p1+p2^2=n} log p1 log p2
///   TWO_PSQ   r''_{2,2}  = sum_{p1^2+p2^2=n} log p1 log p2
///   PSQ_SQ    r'_{2,2}   = sum_{p^2+m^2=n, m>=1} log p
/// L is the von Mangoldt function. All tuples are ordered.
enum class ProblemKind { GOLDBACH, HL, HUA, P1P2SQ, TWO_PSQ, PSQ_SQ };

inline constexpr ProblemKind kAllProblemKinds[] = {ProblemKind::GOLDBACH, ProblemKind::HL,
                                                   ProblemKind::HUA,      ProblemKind::P1P2SQ,
                                                   ProblemKind::TWO_PSQ,  ProblemKind::PSQ_SQ};

std::string_view to_string(ProblemKind kind);
/// Accepts the enumerator names case-insensitively; throws InvalidArgument.
ProblemKind parse_problem_kind(std::string_view name);

/// Smallest sieve limit that covers every summand of representations of n.
std::uint64_t required_sieve_limit(ProblemKind kind, std::uint64_t n);

/// Weighted number of ordered representations of n. Throws OutOfRange
/// (naming the required limit) when the sieve is too small.
double representation_count(ProblemKind kind, std::uint64_t n, const SieveTable& sieve);

/// sum_{n <= N} representation_count(kind, n). GOLDBACH and HL enumerate
/// summand pairs directly instead of recomputing every n.
double cumulative_sum(ProblemKind kind, std::uint64_t N, const SieveTable& sieve);

/// sum_{n = N+1}^{N+H} representation_count(kind, n). H = 0 is rejected.
double short_interval_sum(ProblemKind kind, std::uint64_t N, std::uint64_t H,
                          const SieveTable& sieve);

/// sum_{n <= N} representation_count(kind, n) (1 - n/N)^k / Gamma(k+1), k > 0.
double cesaro_sum(ProblemKind kind, std::uint64_t N, double k, const SieveTable& sieve);

/// sum_{n <= N} R_G(n) (1 - n/N), the unnormalized k = 1 weight.
double goldbach_linear_weighted_sum(std::uint64_t N, const SieveTable& sieve);

/// sum_{n = N+1}^{N+H} e^{-n/N} R_G(n).
double exp_weighted_short_sum(std::uint64_t N, std::uint64_t H, const SieveTable& sieve);

}  // namespace primesums
