#pragma once

// Brute-force reference values built on trial division only.

#include <cmath>
#include <cstdint>

#include "primesums/arith.hpp"

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline double mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

inline double log_if_prime(std::uint64_t n) {
  return is_prime(n) ? std::log(static_cast<double>(n)) : 0.0;
}

inline double representation_count(primesums::ProblemKind kind, std::uint64_t n) {
  using primesums::ProblemKind;
  double total = 0.0;
  switch (kind) {
    case ProblemKind::GOLDBACH:
      for (std::uint64_t a = 1; a < n; ++a) total += mangoldt(a) * mangoldt(n - a);
      break;
    case ProblemKind::HL:
      for (std::uint64_t m = 1; m * m < n; ++m) total += mangoldt(n - m * m);
      break;
    case ProblemKind::HUA:
      for (std::uint64_t b = 1; b * b < n; ++b)
        for (std::uint64_t c = 1; b * b + c * c < n; ++c)
          total += log_if_prime(n - b * b - c * c) * log_if_prime(b) * log_if_prime(c);
      break;
    case ProblemKind::P1P2SQ:
      for (std::uint64_t b = 1; b * b < n; ++b) total += log_if_prime(n - b * b) * log_if_prime(b);
      break;
    case ProblemKind::TWO_PSQ:
      for (std::uint64_t a = 1; a * a < n; ++a) {
        const std::uint64_t r = n - a * a;
        const auto b = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(r))));
        if (b * b == r) total += log_if_prime(a) * log_if_prime(b);
      }
      break;
    case ProblemKind::PSQ_SQ:
      for (std::uint64_t m = 1; m * m < n; ++m) {
        const std::uint64_t r = n - m * m;
        const auto p = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(r))));
        if (p * p == r) total += log_if_prime(p);
      }
      break;
  }
  return total;
}

}  // namespace oracle
