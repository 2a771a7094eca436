#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "fhle/error.hpp"
#include "fhle/parallel.hpp"

namespace fhle::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

// A rule on a fixed interval: nodes plus weights.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Jacobi rule for ∫_{-1}^{1} f(x) (1-x)^alpha (1+x)^beta dx, built with
// the Golub-Welsch eigenvalue method. alpha, beta > -1.
Rule gauss_jacobi(int m, double alpha, double beta);
inline Rule gauss_legendre(int m) { return gauss_jacobi(m, 0.0, 0.0); }

// Maps a rule on [-1, 1] onto [a, b].
Rule affine(const Rule& rule, double a, double b);

struct TanhSinhOptions {
  double rel_tol = 1e-11;
  double abs_tol = 0.0;
  int min_level = 3;
  int max_level = 10;
  double t_max = 6.5;
};

// Double-exponential quadrature of ∫_a^b. The integrand is called as
// f(x, x - a, b - x), with both distances computed without cancellation, so
// endpoint singularities can be evaluated from the exact complement.
// Points of each refinement level are evaluated through parallel_for into
// indexed slots and summed serially, so Serial and Parallel agree bitwise.
template <class F>
Result tanh_sinh(F&& f, double a, double b, const TanhSinhOptions& opt = {},
                 Execution exec = Execution::Serial) {
  Result out;
  if (!(b > a)) {
    if (a == b) return out;
    fail(ErrorKind::InvalidParameter, "tanh_sinh: empty or reversed interval");
  }
  const double half = 0.5 * (b - a);
  const double hpi = 0.5 * M_PI;

  auto term = [&](double t) -> double {
    const double u = hpi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    // Distance to the nearer endpoint: (b-a) e^{-2|u|} / (1 + e^{-2|u|}).
    const double near = (b - a) * e / (1.0 + e);
    if (!(near > 0.0)) return 0.0;
    const double far = (b - a) - near;
    const double ch = std::cosh(u);
    const double w = half * hpi * std::cosh(t) / (ch * ch);
    if (!(w > 0.0) || !std::isfinite(w)) return 0.0;
    const double x = t < 0.0 ? a + near : b - near;
    const double fa = t < 0.0 ? near : far;
    const double fb = t < 0.0 ? far : near;
    const double v = f(x, fa, fb);
    return w * v;
  };

  auto level_sum = [&](double h, bool odd_only, int& evals) -> double {
    const std::size_t kmax = static_cast<std::size_t>(std::ceil(opt.t_max / h));
    std::vector<double> ts;
    ts.reserve(2 * kmax + 1);
    if (!odd_only) ts.push_back(0.0);
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (odd_only && k % 2 == 0) continue;
      const double t = static_cast<double>(k) * h;
      ts.push_back(t);
      ts.push_back(-t);
    }
    std::vector<double> vals(ts.size(), 0.0);
    parallel_for(ts.size(), [&](std::size_t i) { vals[i] = term(ts[i]); }, exec);
    evals += static_cast<int>(ts.size());
    double s = 0.0;
    for (double v : vals) s += v;
    return s;
  };

  double h = 1.0;
  double sum = level_sum(h, false, out.evaluations);
  double estimate = h * sum;
  double previous = estimate;
  double diff = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= opt.max_level; ++level) {
    h *= 0.5;
    sum += level_sum(h, true, out.evaluations);
    estimate = h * sum;
    diff = std::abs(estimate - previous);
    previous = estimate;
    if (!std::isfinite(estimate)) fail(ErrorKind::NonConvergent, "tanh_sinh: non-finite integrand sum");
    if (level >= opt.min_level && diff <= std::max(opt.abs_tol, opt.rel_tol * std::abs(estimate))) break;
  }
  out.value = estimate;
  out.error = diff;
  return out;
}

// Fixed tanh-sinh nodes on [a, b] at step h, for integrands that are reused
// across many outer evaluations (the caller caches f at the nodes).
struct FixedNodes {
  std::vector<double> x;
  std::vector<double> dist_a;
  std::vector<double> dist_b;
  std::vector<double> w;
};
FixedNodes tanh_sinh_nodes(double a, double b, double h, double t_max = 6.5);

// Double-exponential rule for ∫_a^∞ via x = a + L exp(π/2 sinh t). The
// integrand receives (x, x - a).
template <class F>
Result exp_sinh(F&& f, double a, double scale = 1.0, const TanhSinhOptions& opt = {},
                Execution exec = Execution::Serial) {
  Result out;
  const double hpi = 0.5 * M_PI;
  auto term = [&](double t) -> double {
    const double e = hpi * std::sinh(t);
    if (e > 700.0) return 0.0;
    const double d = scale * std::exp(e);
    if (!(d > 0.0)) return 0.0;
    const double w = d * hpi * std::cosh(t);
    const double v = f(a + d, d);
    const double r = w * v;
    return std::isfinite(r) ? r : 0.0;
  };
  auto level_sum = [&](double h, bool odd_only, int& evals) {
    const std::size_t kmax = static_cast<std::size_t>(std::ceil(opt.t_max / h));
    std::vector<double> ts;
    if (!odd_only) ts.push_back(0.0);
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (odd_only && k % 2 == 0) continue;
      ts.push_back(static_cast<double>(k) * h);
      ts.push_back(-static_cast<double>(k) * h);
    }
    std::vector<double> vals(ts.size(), 0.0);
    parallel_for(ts.size(), [&](std::size_t i) { vals[i] = term(ts[i]); }, exec);
    evals += static_cast<int>(ts.size());
    double s = 0.0;
    for (double v : vals) s += v;
    return s;
  };
  double h = 1.0;
  double sum = level_sum(h, false, out.evaluations);
  double previous = h * sum, estimate = previous;
  double diff = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= opt.max_level; ++level) {
    h *= 0.5;
    sum += level_sum(h, true, out.evaluations);
    estimate = h * sum;
    diff = std::abs(estimate - previous);
    previous = estimate;
    if (!std::isfinite(estimate)) fail(ErrorKind::NonConvergent, "exp_sinh: non-finite integrand sum");
    if (level >= opt.min_level && diff <= std::max(opt.abs_tol, opt.rel_tol * std::abs(estimate))) break;
  }
  out.value = estimate;
  out.error = diff;
  return out;
}

namespace detail {
extern const double kronrod_x[8];
extern const double kronrod_w[8];
extern const double gauss_w[4];

template <class F>
void gk15(F& f, double a, double b, double& value, double& error) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  const double fc = f(c);
  double resk = fc * kronrod_w[7];
  double resg = fc * gauss_w[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = hl * kronrod_x[j];
    const double f1 = f(c - dx), f2 = f(c + dx);
    resk += kronrod_w[j] * (f1 + f2);
    if (j % 2 == 1) resg += gauss_w[j / 2] * (f1 + f2);
  }
  value = resk * hl;
  error = std::abs((resk - resg) * hl);
}
}  // namespace detail

struct AdaptiveOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  int max_intervals = 4000;
};

// Globally adaptive 7/15-point Gauss-Kronrod on [a, b], with the interval
// initially split at the supplied breakpoints.
template <class F>
Result gauss_kronrod(F&& f, double a, double b, std::vector<double> breakpoints = {},
                     const AdaptiveOptions& opt = {}) {
  Result out;
  if (a == b) return out;
  struct Piece {
    double a, b, value, error;
    bool operator<(const Piece& o) const { return error < o.error; }
  };
  std::vector<double> cuts{a};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double x : breakpoints)
    if (x > a && x < b && x > cuts.back()) cuts.push_back(x);
  cuts.push_back(b);

  std::priority_queue<Piece> heap;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Piece p{cuts[i], cuts[i + 1], 0.0, 0.0};
    detail::gk15(f, p.a, p.b, p.value, p.error);
    out.evaluations += 15;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }
  while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
         static_cast<int>(heap.size()) < opt.max_intervals) {
    Piece worst = heap.top();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b)) break;
    heap.pop();
    Piece l{worst.a, m, 0.0, 0.0}, r{m, worst.b, 0.0, 0.0};
    detail::gk15(f, l.a, l.b, l.value, l.error);
    detail::gk15(f, r.a, r.b, r.value, r.error);
    out.evaluations += 30;
    total += l.value + r.value - worst.value;
    total_err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }
  // Resum from scratch: the running totals accumulate rounding.
  total = 0.0;
  total_err = 0.0;
  std::vector<Piece> pieces;
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
  for (const Piece& p : pieces) {
    total += p.value;
    total_err += p.error;
  }
  out.value = total;
  out.error = total_err;
  return out;
}

}  // namespace fhle::quad
