#include "fhle/fraclap.hpp"

#include <algorithm>
#include <cmath>

#include "fhle/error.hpp"
#include "fhle/quadrature.hpp"

namespace fhle {

namespace {

const quad::Rule& legendre16() {
  static const quad::Rule rule = quad::gauss_legendre(16);
  return rule;
}

template <class F>
double gl(F&& f, double a, double b) {
  const quad::Rule& rule = legendre16();
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(c + h * rule.nodes[i]);
  return h * s;
}

// ∫_a^b with geometric subdivision when the interval spans many octaves.
template <class F>
double graded(F&& f, double a, double b) {
  double total = 0.0;
  while (b > 2.0 * a && a > 0.0) {
    total += gl(f, a, 2.0 * a);
    a *= 2.0;
  }
  return total + gl(f, a, b);
}

}  // namespace

double oscillatory_tail(double z, double q, bool sine) {
  if (!(z > 0.0) || !(q > 0.0)) fail(ErrorKind::InvalidParameter, "oscillatory_tail needs z > 0, q > 0");
  auto f = [&](double v) { return std::pow(v, -q) * (sine ? std::sin(v) : std::cos(v)); };
  // Zeros of cos at (k+1/2)π, of sin at kπ.
  const double offset = sine ? 0.0 : 0.5 * M_PI;
  double k = std::ceil((z - offset) / M_PI);
  double zero = offset + k * M_PI;
  if (zero <= z) zero += M_PI;
  double head = graded(f, z, zero);
  constexpr int terms = 40;
  double partial[terms];
  double acc = 0.0;
  for (int j = 0; j < terms; ++j) {
    acc += gl(f, zero + j * M_PI, zero + (j + 1) * M_PI);
    partial[j] = acc;
  }
  // Repeated averaging of the alternating partial sums (Euler-type acceleration).
  constexpr int window = 24;
  double avg[window];
  for (int j = 0; j < window; ++j) avg[j] = partial[terms - window + j];
  for (int level = window - 1; level > 0; --level)
    for (int j = 0; j < level; ++j) avg[j] = 0.5 * (avg[j] + avg[j + 1]);
  return head + avg[0];
}

SampledRadial frac_laplacian_oracle(const RadialProfile& u, int n, double s, const std::vector<double>& r_out,
                                    const OracleOptions& opt) {
  if (n != 1 && n != 3) fail(ErrorKind::UnsupportedDimension, "spectral oracle supports n = 1 and n = 3 only");
  if (!(s > 0.0 && s < 2.0) || s == 1.0) fail(ErrorKind::InvalidParameter, "order must lie in (0,1) or (1,2)");
  const double L = u.scale();
  const TailModel& tail = u.tail();
  if (tail.kind == TailModel::Kind::Constant) fail(ErrorKind::NonIntegrable, "constant tail is not integrable");
  if (tail.kind == TailModel::Kind::PowerLaw && !(tail.exponent > n))
    fail(ErrorKind::NonIntegrable, "power-law tail must decay faster than r^{-n}");

  // Spatial truncation: the tail model takes over at X, or the profile is cut
  // where it has decayed below double precision.
  double X;
  const bool modeled = tail.kind == TailModel::Kind::PowerLaw;
  if (modeled) {
    X = opt.tail_start > 0.0 ? opt.tail_start : 400.0 * L;
    if (u.is_sampled()) X = std::min(X, u.r_max());
  } else {
    double peak = 0.0;
    for (double x = 0.0; x <= 4.0 * L; x += 0.125 * L) peak = std::max(peak, std::abs(u(x)));
    X = 4.0 * L;
    while (std::abs(u(X)) > 1e-18 * peak || std::abs(u(1.5 * X)) > 1e-18 * peak) {
      X *= 1.5;
      if (X > 1e6 * L) fail(ErrorKind::NonIntegrable, "profile does not decay; supply a tail model");
    }
    if (u.is_sampled()) X = std::min(X, u.r_max());
  }

  // Radial transform: n=1 û(ξ) = 2∫u cos(ξx) dx; n=3 F(k) = 4π∫u r^2 sinc(kr) dr.
  auto forward = [&](double xi) {
    double total = 0.0;
    double a = 0.0;
    while (a < X) {
      const double width = std::min(2.0 * M_PI / xi, std::max(0.25 * L, a / 8.0));
      const double b = std::min(X, a + width);
      if (n == 1) {
        total += gl([&](double x) { return u(x) * std::cos(xi * x); }, a, b);
      } else {
        total += gl([&](double r) {
          const double kr = xi * r;
          const double sinc = kr < 1e-8 ? 1.0 : std::sin(kr) / kr;
          return u(r) * r * r * sinc;
        }, a, b);
      }
      a = b;
    }
    if (modeled) {
      const double C = tail.coefficient, k = tail.exponent;
      if (n == 1) total += C * std::pow(xi, k - 1.0) * oscillatory_tail(xi * X, k, false);
      else total += C * std::pow(xi, k - 2.0) * oscillatory_tail(xi * X, k - 1.0, true) / xi;
    }
    return n == 1 ? 2.0 * total : 4.0 * M_PI * total;
  };

  double r_top = 0.0;
  for (double r : r_out) r_top = std::max(r_top, std::abs(r));
  const double panel = std::min(0.5 / L, M_PI / std::max(r_top, 1e-300));

  double cutoff = opt.cutoff_start > 0.0 ? opt.cutoff_start : 16.0 / L;
  const double cutoff_max = opt.cutoff_max > 0.0 ? opt.cutoff_max : 1024.0 / L;
  const quad::Rule first = quad::gauss_jacobi(opt.panel_nodes, 0.0, 2.0 * s);
  const quad::Rule plain = quad::gauss_legendre(opt.panel_nodes);

  for (;;) {
    // Frequency rule: Gauss-Jacobi against ξ^{2s} on the first panel, Gauss-
    // Legendre on the rest (the multiplier is applied explicitly there).
    std::vector<double> xi, w;
    {
      const double h = std::min(panel, cutoff);
      const double scale = std::pow(0.5 * h, 2.0 * s + 1.0);
      for (std::size_t i = 0; i < first.nodes.size(); ++i) {
        xi.push_back(0.5 * h * (1.0 + first.nodes[i]));
        w.push_back(scale * first.weights[i]);
      }
      const std::size_t panels = static_cast<std::size_t>(std::ceil((cutoff - h) / panel));
      for (std::size_t p = 0; p < panels; ++p) {
        const double a = h + p * panel, b = std::min(cutoff, a + panel);
        if (!(b > a)) break;
        const quad::Rule r = quad::affine(plain, a, b);
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
          xi.push_back(r.nodes[i]);
          w.push_back(r.weights[i] * std::pow(r.nodes[i], 2.0 * s));
        }
      }
    }
    std::vector<double> spectrum(xi.size());
    parallel_for(xi.size(), [&](std::size_t i) { spectrum[i] = forward(xi[i]); }, opt.exec);

    double mass = 0.0, top = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
      const double m = std::abs(w[i] * spectrum[i]) * (n == 3 ? xi[i] * xi[i] : 1.0);
      mass += m;
      if (xi[i] > 0.5 * cutoff) top += m;
    }
    if (top > opt.tail_fraction * mass) {
      if (2.0 * cutoff > cutoff_max)
        fail(ErrorKind::AliasingDetected, "spectral tail above tolerance at the largest cutoff");
      cutoff *= 2.0;
      continue;
    }

    SampledRadial out;
    out.r = r_out;
    out.values.resize(r_out.size());
    for (std::size_t k = 0; k < r_out.size(); ++k) {
      const double r = std::abs(r_out[k]);
      double acc = 0.0;
      for (std::size_t i = 0; i < xi.size(); ++i) {
        if (n == 1) {
          acc += w[i] * spectrum[i] * std::cos(xi[i] * r);
        } else {
          const double kr = xi[i] * r;
          const double sinc = kr < 1e-8 ? 1.0 : std::sin(kr) / kr;
          acc += w[i] * spectrum[i] * xi[i] * xi[i] * sinc;
        }
      }
      out.values[k] = n == 1 ? acc / M_PI : acc / (2.0 * M_PI * M_PI);
    }
    return out;
  }
}

}  // namespace fhle
