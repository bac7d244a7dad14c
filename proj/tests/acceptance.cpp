// One PASS/FAIL line per acceptance criterion, with wall time and the
// measured quantities behind the verdict.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "primesums/analysis.hpp"
#include "primesums/arith.hpp"
#include "primesums/cli.hpp"
#include "primesums/explicit_formula.hpp"
#include "primesums/expsum.hpp"
#include "primesums/special.hpp"
#include "primesums/zeros.hpp"

using namespace primesums;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [x]");
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const ZeroTable& zeros() {
  static const ZeroTable t = load_zeros(PRIMESUMS_DATA_DIR "/zeros.txt");
  return t;
}

double spread(const std::vector<double>& v) {
  double lo = INFINITY, hi = 0.0;
  for (double x : v) {
    lo = std::min(lo, std::fabs(x));
    hi = std::max(hi, std::fabs(x));
  }
  return hi / lo;
}

Outcome c1_sieve_oracle() {
  Outcome o;
  const auto s = build_sieve(500);
  std::size_t bad = 0;
  for (auto kind : kAllProblemKinds)
    for (std::uint64_t n = 1; n <= 500; ++n) {
      const double a = representation_count(kind, n, s);
      const double b = oracle::representation_count(kind, n);
      if (std::fabs(a - b) > 1e-12 * std::max(1.0, std::fabs(b))) ++bad;
    }
  o.require(bad == 0, std::to_string(bad) + " mismatches over 6 kinds x 500 n");
  return o;
}

Outcome c2_goldbach() {
  Outcome o;
  const auto s = build_sieve(1 << 14);
  const auto view = first_zeros(zeros(), 10000);
  std::vector<double> ratios;
  for (std::uint64_t N : {4096u, 8192u, 16384u}) {
    const auto r = goldbach_average(N, view, s);
    const double plain = std::fabs(r.lhs - r.term("main"));
    o.require(std::fabs(r.residual) < plain, "N=" + std::to_string(N) + " |res|=" + fmt("%.4g", std::fabs(r.residual)) +
                                                  " vs |lhs-main|=" + fmt("%.4g", plain));
    ratios.push_back(r.ratio);
  }
  o.require(spread(ratios) < 5.0, "ratio spread " + fmt("%.3g", spread(ratios)));
  return o;
}

Outcome c3_cesaro() {
  Outcome o;
  const auto s = build_sieve(1 << 12);
  const auto view = truncate(zeros(), 1e3);
  std::vector<double> ratios;
  for (std::uint64_t N : {1024u, 2048u, 4096u}) {
    const auto r = goldbach_cesaro(N, 2.0, view, s, 1e3);
    ratios.push_back(r.residual / double(N));
    const double frac = std::fabs(r.double_sum_tail / r.term("double_zero_sum"));
    o.require(frac < 0.05, "N=" + std::to_string(N) + " tail " + fmt("%.2g", frac));
  }
  o.require(spread(ratios) < 5.0, "|res|/N spread " + fmt("%.3g", spread(ratios)));
  return o;
}

Outcome c4_hardy_littlewood() {
  Outcome o;
  const auto s = build_sieve(4000);
  const auto view = truncate(zeros(), 1e3);
  const auto a = hl_cesaro(1000, 2.0, view, s, 50);
  const auto b = hl_cesaro(4000, 2.0, view, s, 50);
  o.require(a.terms.size() == 6, "six terms");
  const double without = std::fabs(a.residual + a.term("bessel_sum"));
  o.require(without > std::fabs(a.residual),
            "|res| " + fmt("%.10g", std::fabs(a.residual)) + " -> " + fmt("%.10g", without) + " without bessel_sum");
  const double r1 = std::fabs(a.residual) / std::sqrt(1000.0), r2 = std::fabs(b.residual) / std::sqrt(4000.0);
  o.require(std::max(r1, r2) / std::min(r1, r2) < 5.0, "|res|/sqrtN " + fmt("%.3g", r1) + " -> " + fmt("%.3g", r2));
  return o;
}

Outcome c5_goldston_yang() {
  Outcome o;
  const auto s = build_sieve(1 << 14);
  const auto view = truncate(zeros(), 1e4);
  std::vector<double> ratios;
  for (std::uint64_t N : {4096u, 16384u}) {
    const auto r = goldston_yang(N, view, s);
    const double other = std::tgamma(2.0) * cesaro_sum(ProblemKind::GOLDBACH, N, 1.0, s);
    const double rel = std::fabs(r.lhs - other) / std::fabs(other);
    o.require(rel <= 1e-10, "N=" + std::to_string(N) + " lhs rel " + fmt("%.2g", rel));
    ratios.push_back(r.residual / double(N));
  }
  o.require(spread(ratios) < 5.0, "|res|/N spread " + fmt("%.3g", spread(ratios)));
  return o;
}

Outcome c6_linnik() {
  Outcome o;
  const std::uint64_t N = 10000;
  const auto s = build_sieve(n_max(ExpSumConfig{}, N));
  for (double alpha : {0.0, 1.0 / N, 1e-2, 1e-1}) {
    const auto p = ComplexParam::segment(N, alpha);
    const cd exact = s_tilde(ExpSumConfig{}, p, s);
    const double lo = std::abs(linnik_approx(ExpSumConfig{}, p, truncate(zeros(), 1e3)) - exact);
    const double hi = std::abs(linnik_approx(ExpSumConfig{}, p, truncate(zeros(), 1e4)) - exact);
    const double rel = hi / std::abs(exact);
    const double limit = alpha == 0.0 ? 1e-2 : 1e-1;
    o.require(rel <= limit, "a=" + fmt("%g", alpha) + " rel " + fmt("%.3g", rel));
    o.require(hi <= lo * (1 + 1e-9), "err T=1e3 " + fmt("%.4g", lo) + " -> T=1e4 " + fmt("%.4g", hi));
  }
  return o;
}

Outcome c7_laplace() {
  Outcome o;
  const QuadratureSpec q;
  const double neg = std::abs(line_integral_laplace(2.0, 1.0, -1.0, q));
  o.require(neg <= 1e-6, "D<0 " + fmt("%.2g", neg));
  const double half = std::abs(line_integral_laplace(1.0, 1.0, 0.0, q) - 0.5);
  o.require(half <= 1e-6, "s=1 dev " + fmt("%.2g", half));
  double d[3];
  const std::uint64_t ns[3] = {100, 1000, 10000};
  for (int i = 0; i < 3; ++i) {
    const auto r = laplace_segment_check(1.0, ns[i], ns[i], q);
    d[i] = std::abs(r.numeric - r.closed_form);
  }
  const double slope = (std::log(d[2]) - std::log(d[0])) / std::log(100.0);
  o.require(slope >= -1.3 && slope <= -0.7, "slope " + fmt("%.3f", slope));
  return o;
}

Outcome c8_theta() {
  Outcome o;
  double worst = 0.0;
  for (cd z : cli::theta_sample_points()) worst = std::max(worst, theta_modular_residual(z));
  o.require(worst <= 1e-12, "modular residual " + fmt("%.2g", worst));
  ExpSumConfig c;
  c.ell = 2;
  double bridge = 0.0;
  for (std::uint64_t N : {1u, 2u, 5u, 10u, 20u})
    for (double a : {0.0, 0.1, 0.25, 0.37}) {
      auto p = ComplexParam::segment(N, a);
      p.turns = -static_cast<long double>(p.z.imag()) / (2.0L * std::numbers::pi_v<long double>);
      const cd th = theta(p.z);
      bridge = std::max(bridge, std::abs(2.0 * omega(c, p) + 1.0 - th) / std::abs(th));
    }
  o.require(bridge <= 1e-14, "bridge " + fmt("%.2g", bridge));
  return o;
}

Outcome c9_bessel() {
  Outcome o;
  const QuadratureSpec q;
  double worst = 0.0;
  for (const auto& bc : cli::bessel_check_grid()) {
    const cd a = bessel_j_series(bc.nu, bc.u);
    const cd b = bessel_j_sonine(bc.nu, bc.u, 1.0, q);
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  o.require(worst <= 1e-8, "cross-method " + fmt("%.2g", worst));
  double half = 0.0;
  for (double u : {0.5, 2.0, 5.0, 20.0}) {
    const double exact = std::sqrt(2.0 / (pi * u)) * std::sin(u);
    half = std::max({half, std::abs(bessel_j_series(0.5, u) - exact), std::abs(bessel_j_sonine(0.5, u, 1.0, q) - exact)});
  }
  o.require(half <= 1e-10, "half order " + fmt("%.2g", half));
  return o;
}

Outcome c10_mean_squares() {
  Outcome o;
  const QuadratureSpec q;
  const auto s = build_sieve(500'000);
  double lsq = 0.0;
  for (std::uint64_t n = 1; n <= 1000; ++n) lsq += s.lambda(n) * s.lambda(n);
  const double pars = classical_full_period_mean_square(ExpSumConfig{}, 1000, s, q);
  o.require(std::fabs(pars - lsq) <= 1e-8 * lsq, "Parseval rel " + fmt("%.2g", std::fabs(pars - lsq) / lsq));
  double worst = 0.0;
  for (unsigned ell : {1u, 2u})
    for (double xi : {1e-3, 1e-2, 1e-1}) {
      ExpSumConfig c;
      c.ell = ell;
      worst = std::max(worst, mean_square_tilde(c, 1000, xi, s, q).ratio);
    }
  o.require(worst <= 10.0, "tilde mean-square ratio max " + fmt("%.3g", worst));
  const auto f = fourth_moment(200, s);
  const double frel = std::fabs(f.integral - f.companion_integral) / f.companion_integral;
  o.require(frel <= 1e-4, "fourth moment Parseval rel " + fmt("%.2g", frel));
  for (std::uint64_t N : {1000u, 10000u}) {
    const auto r = fourth_moment(N, s);
    o.require(r.ratio <= 10.0, "N=" + std::to_string(N) + " ratio " + fmt("%.3g", r.ratio));
  }
  return o;
}

Outcome c11_short_intervals() {
  Outcome o;
  const auto s = build_sieve(1'100'000);
  auto ratio = [&](ProblemKind k, std::uint64_t N, std::uint64_t H) {
    const auto r = short_interval_report(k, N, H, s);
    return r.lhs / r.term("main");
  };
  const double p = ratio(ProblemKind::P1P2SQ, 1000000, 10000);
  o.require(p >= 0.8 && p <= 1.2, "P1P2SQ " + fmt("%.4f", p));

  const double t[3] = {ratio(ProblemKind::TWO_PSQ, 1000000, 1000), ratio(ProblemKind::TWO_PSQ, 1000000, 10000),
                       ratio(ProblemKind::TWO_PSQ, 1000000, 100000)};
  const int better = (std::fabs(t[1] - 1) < std::fabs(t[0] - 1)) + (std::fabs(t[2] - 1) < std::fabs(t[1] - 1)) +
                     (std::fabs(t[2] - 1) < std::fabs(t[0] - 1));
  o.require(std::fabs(t[2] - 1) <= 0.2 && better >= 2,
            "TWO_PSQ " + fmt("%.4f", t[0]) + "/" + fmt("%.4f", t[1]) + "/" + fmt("%.4f", t[2]) + " improving " +
                std::to_string(better) + "/3");

  const double h1 = ratio(ProblemKind::HUA, 100000, 1000), h2 = ratio(ProblemKind::HUA, 100000, 10000);
  o.require(std::fabs(h2 - 1) < std::fabs(h1 - 1) && std::fabs(h2 - 1) <= 0.2,
            "HUA " + fmt("%.4f", h1) + " -> " + fmt("%.4f", h2));
  return o;
}

std::vector<std::vector<std::string>> suite() {
  return {
      {"build-sieve", "--limit", "100000"},
      {"verify-goldbach", "--n", "4096,8192,16384"},
      {"verify-cesaro", "--n", "1024,2048"},
      {"verify-gy", "--n", "4096,16384"},
      {"verify-hl", "--n", "1000"},
      {"verify-shortinterval", "--problem", "TWO_PSQ", "--n", "1000000", "-H", "1000,10000,100000"},
      {"meansquare", "--ell", "2", "--n", "1000", "--xi-grid", "1e-3,1e-2,1e-1"},
      {"meansquare", "--kind", "classical", "--n", "1000", "--xi-grid", "1e-3,1e-2"},
      {"meansquare", "--kind", "omega", "--ell", "2", "--n", "10000", "--xi-grid", "0.01,0.5"},
      {"fourthmoment", "--n", "200,1000"},
      {"expsum-compare", "--n", "10000", "--alpha-grid", "0,1e-4,1e-2"},
      {"laplace-check", "--n", "1000", "--freq", "100,1000"},
      {"theta-check"},
      {"bessel-check"},
  };
}

Outcome c12_determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "primesums_acceptance";
  fs::remove_all(root);
  std::size_t idx = 0, same = 0, failed = 0;
  for (const auto& args : suite()) {
    std::string bytes[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / ("run" + std::to_string(run));
      fs::create_directories(dir);
      const fs::path out = dir / ("out" + std::to_string(idx) + ".csv");
      std::vector<std::string> v = {"primesums"};
      v.insert(v.end(), args.begin(), args.end());
      v.insert(v.end(), {"--output", out.string()});
      std::vector<const char*> argv;
      for (const auto& a : v) argv.push_back(a.c_str());
      std::ostringstream sink, err;
      if (cli::run(static_cast<int>(argv.size()), argv.data(), sink, err) != 0) ++failed;
      std::ifstream in(out, std::ios::binary);
      bytes[run].assign(std::istreambuf_iterator<char>(in), {});
    }
    if (!bytes[0].empty() && bytes[0] == bytes[1]) ++same;
    ++idx;
  }
  o.require(failed == 0, std::to_string(failed) + " failed runs");
  o.require(same == idx, std::to_string(same) + "/" + std::to_string(idx) + " CSVs byte-identical");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, 10, c1_sieve_oracle},       {2, 120, c2_goldbach},         {3, 300, c3_cesaro},
      {4, 300, c4_hardy_littlewood},  {5, 600, c5_goldston_yang},    {6, 600, c6_linnik},
      {7, 600, c7_laplace},           {8, 600, c8_theta},            {9, 600, c9_bessel},
      {10, 600, c10_mean_squares},    {11, 300, c11_short_intervals}, {12, 1800, c12_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.require(false, "runtime over " + fmt("%.0f", c.budget_s) + " s");
    failures += !o.pass;
    std::printf("criterion %2d: %s  (%.1f s)  %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
