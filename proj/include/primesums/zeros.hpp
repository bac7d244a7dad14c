#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace primesums {

/// Ordinates gamma > 0 of nontrivial zeta zeros, ascending. Every zero is
/// taken on the critical line, rho = 1/2 + i gamma; conjugates are implied.
class ZeroTable {
 public:
  ZeroTable(std::vector<double> gammas, std::string source);

  std::span<const double> gammas() const { return *gammas_; }
  std::size_t size() const { return gammas_->size(); }
  const std::string& source() const { return source_; }
  /// Lines whose decimal expansion carried more digits than a double keeps.
  std::size_t truncated_lines() const { return truncated_lines_; }
  void set_truncated_lines(std::size_t n) { truncated_lines_ = n; }

  static constexpr double beta = 0.5;

 private:
  std::shared_ptr<const std::vector<double>> gammas_;
  std::string source_;
  std::size_t truncated_lines_ = 0;
};

/// Non-owning view of a prefix of a ZeroTable.
using ZeroView = std::span<const double>;

/// Reads one ordinate per line; blank lines and lines starting with '#' are
/// skipped. Throws FormatError (with line number) on unparsable lines and
/// ValidationError for an empty, unsorted or nonpositive table.
ZeroTable load_zeros(const std::string& path);

/// All ordinates gamma <= T.
ZeroView truncate(const ZeroTable& table, double T);
ZeroView truncate(ZeroView view, double T);
/// The first count ordinates (or all, if fewer).
ZeroView first_zeros(const ZeroTable& table, std::size_t count);

/// Riemann-von Mangoldt main term (T/2pi) log(T/(2 pi e)) + 7/8.
double zero_count_estimate(double T);

inline std::complex<double> rho_of(double gamma) { return {ZeroTable::beta, gamma}; }

/// sum over zeros rho and conj(rho) of a summand whose value at conj(rho) is
/// the conjugate of its value at rho: accumulates 2 Re term(gamma) in
/// ascending gamma. Throws DomainError naming gamma on a non-finite summand.
std::complex<double> conjugate_pair_sum(ZeroView view,
                                        const std::function<std::complex<double>(double)>& term);

/// sum over zeros of term(rho) + term(conj rho) for a general summand.
std::complex<double> two_sided_sum(
    ZeroView view, const std::function<std::complex<double>(std::complex<double>)>& term);

}  // namespace primesums
