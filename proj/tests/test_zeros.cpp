#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "primesums/errors.hpp"
#include "primesums/zeros.hpp"

using namespace primesums;
using cd = std::complex<double>;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("primesums_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const ZeroTable& bundled() {
  static const ZeroTable t = load_zeros(PRIMESUMS_DATA_DIR "/zeros.txt");
  return t;
}

}  // namespace

TEST_CASE("load two ordinates") {
  const auto t = load_zeros(write_temp("two.txt", "14.134725\n21.022040\n"));
  REQUIRE(t.size() == 2);
  CHECK(t.gammas()[0] == 14.134725);
  CHECK(truncate(t, 15.0).size() == 1);
  CHECK(truncate(t, 10.0).empty());
  CHECK(first_zeros(t, 5).size() == 2);
}

TEST_CASE("rejected files") {
  CHECK_THROWS_AS(load_zeros(write_temp("unsorted.txt", "21.0\n14.1\n")), ValidationError);
  CHECK_THROWS_AS(load_zeros(write_temp("empty.txt", "")), ValidationError);
  CHECK_THROWS_AS(load_zeros(write_temp("negative.txt", "-3\n14.1\n")), ValidationError);
  CHECK_THROWS_AS(load_zeros(write_temp("missing_dir/x.txt", "")), ValidationError);
  try {
    load_zeros(write_temp("garbage.txt", "14.13\n21.02\nabc\n"));
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("long decimals are counted as truncated") {
  const auto t = load_zeros(write_temp("long.txt", "14.134725141734693790457251983562\n21.0\n"));
  CHECK(t.truncated_lines() == 1);
}

TEST_CASE("bundled table against published ordinates") {
  const auto g = bundled().gammas();
  const double published[] = {14.134725141734693, 21.022039638771555, 25.010857580145688,
                              30.424876125859513, 32.935061587739189};
  for (std::size_t i = 0; i < 5; ++i) CHECK(g[i] == doctest::Approx(published[i]).epsilon(1e-10));
  CHECK(g.front() > 14.0);
  CHECK(g.front() < 14.3);
  for (std::size_t i = 1; i < g.size(); ++i) REQUIRE(g[i] > g[i - 1]);
}

TEST_CASE("zero counting") {
  for (double T : {100.0, 1000.0, 10000.0}) {
    const double n = static_cast<double>(truncate(bundled(), T).size());
    CHECK(std::fabs(n - zero_count_estimate(T)) <= 2.0);
  }
}

TEST_CASE("conjugate pair sums") {
  const auto view = first_zeros(bundled(), 3);
  CHECK(conjugate_pair_sum(view, [](double) { return cd(1.0, 0.0); }).real() == 6.0);
  CHECK(std::abs(conjugate_pair_sum(view, [](double) { return cd(0.0, 1.0); })) == 0.0);
  CHECK_THROWS_AS(conjugate_pair_sum(view, [](double) { return cd(NAN, 0.0); }), DomainError);
}

TEST_CASE("pair sum equals two-sided sum") {
  const auto view = first_zeros(bundled(), 100);
  const double N = 100.0;
  auto f = [&](cd rho) { return std::exp((rho + 1.0) * std::log(N)) / (rho * (rho + 1.0)); };
  const cd paired = conjugate_pair_sum(view, [&](double g) { return f(rho_of(g)); });
  const cd direct = two_sided_sum(view, f);
  CHECK(std::abs(paired - direct) <= 1e-12 * std::abs(direct));
  CHECK(std::fabs(direct.imag()) <= 1e-10 * std::abs(direct));
}

TEST_CASE("refinement in height shrinks") {
  const double N = 1000.0;
  auto term = [&](double g) {
    const cd rho = rho_of(g);
    return std::exp((rho + 1.0) * std::log(N)) / (rho * (rho + 1.0));
  };
  double prev = INFINITY;
  for (double T : {100.0, 1000.0}) {
    const cd a = conjugate_pair_sum(truncate(bundled(), T), term);
    const cd b = conjugate_pair_sum(truncate(bundled(), 2 * T), term);
    const double step = std::abs(b - a);
    CHECK(step < prev);
    prev = step;
  }
}
