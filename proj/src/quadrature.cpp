#include "primesums/quadrature.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>

#include "primesums/errors.hpp"
#include "primesums/summation.hpp"

namespace primesums {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  if (n == 0) return {1.0, 0.0};
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

GaussLegendreRule make_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

// Kronrod 15-point extension of the 7-point Gauss rule (abscissae >= 0).
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b;
  std::size_t piece;
  std::complex<double> value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gauss_kronrod(const ComplexFn& f, double a, double b, std::size_t piece) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const auto fc = f(c);
  std::complex<double> kron = kWgk[7] * fc;
  std::complex<double> gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const auto s = f(c - dx) + f(c + dx);
    kron += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  kron *= h;
  gauss *= h;
  return {a, b, piece, kron, std::abs(kron - gauss)};
}

std::mutex fftw_mutex;

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1 || n > 256) throw InvalidArgument("Gauss-Legendre order must be in [1, 256]");
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

std::complex<double> composite_gauss_legendre(const ComplexFn& f, double a, double b,
                                              std::size_t panels, int points) {
  const auto& rule = gauss_legendre(points);
  const double width = (b - a) / static_cast<double>(panels);
  CompensatedComplexSum acc;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    std::complex<double> panel{};
    for (int i = 0; i < points; ++i) panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    acc += 0.5 * width * panel;
  }
  return acc.value();
}

QuadResult integrate_oscillatory(const ComplexFn& f, double a, double b, double frequency,
                                 const QuadratureSpec& spec) {
  if (b == a) return {};
  if (frequency > spec.osc_freq_cap)
    throw AccuracyError("declared oscillation frequency " + std::to_string(frequency) +
                        " exceeds the quadrature cap " + std::to_string(spec.osc_freq_cap));
  const double len = std::fabs(b - a);
  auto panels = static_cast<std::size_t>(std::ceil(len * 4.0 * std::max(frequency, 0.0)));
  panels = std::max<std::size_t>(panels, 1);
  if (panels > spec.max_panels)
    throw AccuracyError("oscillation needs " + std::to_string(panels) +
                        " panels, above the budget of " + std::to_string(spec.max_panels));
  auto prev = composite_gauss_legendre(f, a, b, panels, spec.points_per_panel);
  while (true) {
    const std::size_t next = panels * 2;
    if (next > spec.max_panels) {
      throw AccuracyError("quadrature did not converge within " +
                              std::to_string(spec.max_panels) + " panels",
                          std::abs(prev));
    }
    const auto cur = composite_gauss_legendre(f, a, b, next, spec.points_per_panel);
    const double diff = std::abs(cur - prev);
    if (diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(cur))) return {cur, diff, next};
    prev = cur;
    panels = next;
  }
}

QuadResult integrate_adaptive(std::span<const AdaptivePiece> pieces, double abs_tol,
                              double rel_tol, std::size_t max_intervals) {
  std::priority_queue<Interval> heap;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    const std::size_t n = std::max<std::size_t>(p.initial_splits, 1);
    const double w = (p.b - p.a) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = p.a + w * static_cast<double>(j);
      const double hi = (j + 1 == n) ? p.b : lo + w;
      heap.push(gauss_kronrod(p.f, lo, hi, i));
    }
  }
  auto totals = [&heap] {
    // Deterministic: sum in interval order rather than heap order.
    std::vector<Interval> all;
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) {
      return x.piece != y.piece ? x.piece < y.piece : x.a < y.a;
    });
    CompensatedComplexSum v;
    CompensatedSum e;
    for (const auto& it : all) {
      v += it.value;
      e += it.error;
    }
    return std::pair{v.value(), e.value()};
  };
  std::complex<double> value{};
  double error = 0.0;
  for (auto [v, e] = totals();; std::tie(v, e) = totals()) {
    value = v;
    error = e;
    if (error <= std::max(abs_tol, rel_tol * std::abs(value))) break;
    if (heap.size() >= max_intervals)
      throw AccuracyError("adaptive quadrature exceeded " + std::to_string(max_intervals) +
                              " intervals",
                          error);
    // Split the worst few intervals before re-summing.
    const std::size_t batch = std::max<std::size_t>(1, heap.size() / 8);
    for (std::size_t i = 0; i < batch && !heap.empty(); ++i) {
      const auto worst = heap.top();
      heap.pop();
      const double mid = 0.5 * (worst.a + worst.b);
      const auto& f = pieces[worst.piece].f;
      heap.push(gauss_kronrod(f, worst.a, mid, worst.piece));
      heap.push(gauss_kronrod(f, mid, worst.b, worst.piece));
    }
  }
  return {value, error, heap.size()};
}

std::complex<double> periodic_trapezoid(const ComplexFn& f, std::size_t M) {
  if (M == 0) throw InvalidArgument("trapezoid grid must have at least one point");
  CompensatedComplexSum acc;
  const double step = 1.0 / static_cast<double>(M);
  for (std::size_t j = 0; j < M; ++j) acc += f(-0.5 + step * static_cast<double>(j));
  return acc.value() / static_cast<double>(M);
}

std::vector<std::complex<double>> trig_poly_on_grid(
    std::span<const std::pair<std::int64_t, std::complex<double>>> terms, std::size_t M) {
  if (M == 0) throw InvalidArgument("grid size must be positive");
  std::vector<std::complex<double>> coeff(M), out(M);
  const auto m = static_cast<std::int64_t>(M);
  for (const auto& [freq, c] : terms) coeff[static_cast<std::size_t>(((freq % m) + m) % m)] += c;
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(M), reinterpret_cast<fftw_complex*>(coeff.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace primesums
