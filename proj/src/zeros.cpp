#include "primesums/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "primesums/errors.hpp"
#include "primesums/summation.hpp"

namespace primesums {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t significant_digits(std::string_view s) {
  std::size_t count = 0;
  bool leading = true;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

void check_finite(double gamma, std::complex<double> v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite zero-sum summand at gamma=" << gamma;
    throw DomainError(os.str());
  }
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> gammas, std::string source)
    : source_(std::move(source)) {
  if (gammas.empty()) throw ValidationError("zero table '" + source_ + "' is empty");
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!(gammas[i] > 0.0) || !std::isfinite(gammas[i]))
      throw ValidationError("zero table '" + source_ + "': entry " + std::to_string(i + 1) +
                            " is not a positive finite ordinate");
    if (i > 0 && !(gammas[i] > gammas[i - 1]))
      throw ValidationError("zero table '" + source_ + "': entry " + std::to_string(i + 1) +
                            " is not strictly ascending");
  }
  gammas_ = std::make_shared<const std::vector<double>>(std::move(gammas));
}

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open zero file '" + path + "'");
  std::vector<double> gammas;
  std::size_t truncated = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    double v = 0.0;
    const auto* first = t.data();
    const auto* last = t.data() + t.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      throw FormatError("cannot parse ordinate '" + std::string(t) + "' in '" + path + "'", lineno);
    if (significant_digits(t) > 17) ++truncated;
    gammas.push_back(v);
  }
  ZeroTable table(std::move(gammas), path);
  table.set_truncated_lines(truncated);
  return table;
}

ZeroView truncate(ZeroView view, double T) {
  const auto it = std::upper_bound(view.begin(), view.end(), T);
  return view.first(static_cast<std::size_t>(it - view.begin()));
}

ZeroView truncate(const ZeroTable& table, double T) { return truncate(table.gammas(), T); }

ZeroView first_zeros(const ZeroTable& table, std::size_t count) {
  return table.gammas().first(std::min(count, table.size()));
}

double zero_count_estimate(double T) {
  const double two_pi = 2.0 * std::numbers::pi;
  return T / two_pi * std::log(T / (two_pi * std::numbers::e)) + 7.0 / 8.0;
}

std::complex<double> conjugate_pair_sum(
    ZeroView view, const std::function<std::complex<double>(double)>& term) {
  CompensatedSum acc;
  for (double g : view) {
    const auto v = term(g);
    check_finite(g, v);
    acc += 2.0 * v.real();
  }
  return {acc.value(), 0.0};
}

std::complex<double> two_sided_sum(
    ZeroView view, const std::function<std::complex<double>(std::complex<double>)>& term) {
  CompensatedComplexSum acc;
  for (double g : view) {
    const auto a = term({ZeroTable::beta, g});
    const auto b = term({ZeroTable::beta, -g});
    check_finite(g, a);
    check_finite(-g, b);
    acc += a + b;
  }
  return acc.value();
}

}  // namespace primesums
