#include "fhle/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "fhle/exponents.hpp"
#include "fhle/quadrature.hpp"
#include "fhle/specfun.hpp"

namespace fhle {

namespace {

void require_kernel_order(int n, double s) {
  if (n < 1) fail(ErrorKind::InvalidParameter, "n must be >= 1");
  if (!(s > 0.0 && s < 1.0)) fail(ErrorKind::UnsupportedOrder, "kernel representation needs 0 < s < 1");
}

void require_kernel_alpha(const KernelSpec& spec) {
  require_kernel_order(spec.n, spec.s);
  if (!(spec.n - 1.0 - spec.alpha > -1.0) || !(2.0 * spec.s - 1.0 + spec.alpha > -1.0))
    fail(ErrorKind::NonConvergent, "kernel exponents are not integrable at t = 0");
}

// ∫_{-1}^{1} (1-c^2)^{(n-3)/2} (ε^2 + 2 t (1-c))^{-m} dc for n >= 2, with the
// variable u = 1 - c so the peak at c = 1 sits on an exact endpoint.
double angular_inverse_power(int n, double t, double eps, double m) {
  const double e2 = eps * eps;
  const double wexp = 0.5 * (n - 3);
  auto f = [&](double, double u, double v) {
    // u = 1 - c, v = 1 + c
    const double d = e2 + 2.0 * t * u;
    const double w = wexp == 0.0 ? 1.0 : std::pow(u * v, wexp);
    return w * std::pow(d, -m);
  };
  quad::TanhSinhOptions opt;
  opt.rel_tol = 1e-12;
  opt.max_level = 12;
  const double split = (t > 0.0) ? e2 / (2.0 * t) : 2.0;
  if (split > 1e-300 && split < 1.0) {
    auto left = quad::tanh_sinh([&](double x, double, double) {
      const double u = x, v = 2.0 - x;
      return f(0.0, u, v);
    }, 0.0, split, opt);
    auto right = quad::tanh_sinh([&](double x, double, double db) {
      return f(0.0, x, db);
    }, split, 2.0, opt);
    return left.value + right.value;
  }
  return quad::tanh_sinh(f, 0.0, 2.0, opt).value;
}

}  // namespace

double kernel_K_complement(const KernelSpec& spec, double one_minus_c) {
  require_kernel_alpha(spec);
  if (!(one_minus_c >= 0.0 && one_minus_c <= 2.0)) fail(ErrorKind::InvalidParameter, "angle cosine outside [-1,1]");
  if (one_minus_c == 0.0) fail(ErrorKind::SingularEvaluation, "K diverges at c = 1");
  const double m = 0.5 * (spec.n + 2.0 * spec.s);
  const double e1 = spec.n - 1.0 - spec.alpha;
  const double e2 = 2.0 * spec.s - 1.0 + spec.alpha;
  auto f = [&](double t, double, double eps) {
    const double d = eps * eps + 2.0 * t * one_minus_c;
    return (std::pow(t, e1) + std::pow(t, e2)) * std::pow(d, -m);
  };
  quad::TanhSinhOptions opt;
  opt.rel_tol = 1e-12;
  opt.max_level = 12;
  // The integrand peaks within sqrt(1-c) of t = 1; split there.
  const double width = std::sqrt(one_minus_c);
  if (width < 0.25) {
    const double cut = 1.0 - width;
    auto left = quad::tanh_sinh([&](double t, double, double) { return f(t, 0.0, 1.0 - t); }, 0.0, cut, opt);
    auto right = quad::tanh_sinh([&](double t, double, double db) { return f(t, 0.0, db); }, cut, 1.0, opt);
    return left.value + right.value;
  }
  return quad::tanh_sinh(f, 0.0, 1.0, opt).value;
}

double kernel_K(const KernelSpec& spec, double c) {
  require_kernel_alpha(spec);
  if (!(spec.cutoff_delta > 0.0)) fail(ErrorKind::InvalidParameter, "cutoff_delta must be positive");
  if (!(c >= -1.0)) fail(ErrorKind::InvalidParameter, "angle cosine below -1");
  if (c > 1.0 - spec.cutoff_delta) fail(ErrorKind::SingularEvaluation, "c lies inside the diagonal cutoff");
  return kernel_K_complement(spec, 1.0 - c);
}

double folded_constant(int n, double s, double gamma, const KernelQuadrature& q) {
  require_kernel_order(n, s);
  if (!(gamma > 0.0 && gamma < n - 2.0 * s))
    fail(ErrorKind::NonConvergent, "folded constant needs 0 < gamma < n - 2s");
  const double m = 0.5 * (n + 2.0 * s);
  const double rest = n - 2.0 * s - gamma;
  auto numerator = [&](double t) {
    const double lt = std::log(t);
    return std::pow(t, 2.0 * s - 1.0) * std::expm1(gamma * lt) * std::expm1(rest * lt);
  };
  quad::TanhSinhOptions opt;
  opt.rel_tol = q.rel_tol;
  opt.max_level = 12;
  if (n == 1) {
    auto f = [&](double t, double, double eps) {
      if (eps < 1e-100) return 0.0;
      return numerator(t) * (std::pow(eps * eps, -m) + std::pow((1.0 + t) * (1.0 + t), -m));
    };
    return quad::tanh_sinh(f, 0.0, 1.0, opt, q.exec).value;
  }
  auto f = [&](double t, double, double eps) {
    // Below this distance from the diagonal the integrand is O(eps^{1-2s}) and
    // its contribution is far beneath double precision.
    if (eps < 1e-100) return 0.0;
    const double num = numerator(t);
    return num == 0.0 ? 0.0 : num * angular_inverse_power(n, t, eps, m);
  };
  return sphere_area(n - 1) * quad::tanh_sinh(f, 0.0, 1.0, opt, q.exec).value;
}

double a_constant(const ProblemParams& params, const KernelQuadrature& q) {
  require_kernel_order(params.n, params.s);
  const double ps = sobolev_exponent(params.n, params.s, params.a);
  if (!(params.p > ps) || is_critical(params.p, ps))
    fail(ErrorKind::NotSupercritical, "a_constant requires p > p_S");
  return folded_constant(params.n, params.s, params.beta(), q);
}

double hardy_integral(int n, double s, const KernelQuadrature& q) {
  require_kernel_order(n, s);
  if (!(n > 2.0 * s)) fail(ErrorKind::DimensionTooSmall, "hardy_integral requires n > 2s");
  return folded_constant(n, s, 0.5 * (n - 2.0 * s), q);
}

double normalization_ratio(int n, double s) {
  static std::mutex guard;
  static std::map<std::pair<int, double>, double> cache;
  const auto key = std::make_pair(n, s);
  {
    std::lock_guard<std::mutex> lock(guard);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double value = hardy_integral(n, s) / hardy_gamma(n, s);
  std::lock_guard<std::mutex> lock(guard);
  return cache.emplace(key, value).first->second;
}

SphericalProfile SphericalProfile::sample(int n, int count, const std::function<double(double)>& psi) {
  if (n < 1) fail(ErrorKind::InvalidParameter, "profile dimension must be >= 1");
  SphericalProfile out;
  out.n = n;
  if (n == 1) {
    out.nodes = {-1.0, 1.0};
    out.weights = {1.0, 1.0};
  } else {
    if (count < 2) fail(ErrorKind::InvalidParameter, "profile needs at least two nodes");
    const double e = 0.5 * (n - 3);
    quad::Rule rule = quad::gauss_jacobi(count, e, e);
    const double area = sphere_area(n - 1);
    out.nodes = rule.nodes;
    for (double w : rule.weights) out.weights.push_back(area * w);
  }
  for (double c : out.nodes) out.values.push_back(psi(c));
  return out;
}

SphericalProfile SphericalProfile::constant(int n, int count, double value) {
  return sample(n, count, [value](double) { return value; });
}

double SphericalProfile::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double SphericalProfile::operator()(double c) const {
  const std::size_t m = nodes.size();
  if (n == 1) return c < 0.0 ? values[0] : values[1];
  // Barycentric weights for arbitrary nodes, second (true) form.
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double d = c - nodes[j];
    if (d == 0.0) return values[j];
    double w = 1.0;
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) w /= (nodes[j] - nodes[k]);
    num += w / d * values[j];
    den += w / d;
  }
  return num / den;
}

double homogeneous_residual(const SphericalProfile& profile, const ProblemParams& params, const ResidualOptions& opt) {
  require_kernel_order(params.n, params.s);
  if (profile.n != params.n) fail(ErrorKind::InvalidParameter, "profile dimension does not match params");
  const int n = params.n;
  const double A = opt.a_constant ? *opt.a_constant : a_constant(params);
  KernelSpec spec{params.beta(), n, params.s, opt.cutoff_delta};
  const std::size_t m = profile.nodes.size();

  auto reaction = [&](double psi) { return std::pow(std::abs(psi), params.p - 1.0) * psi; };

  std::vector<double> out(m, 0.0);
  if (n == 1) {
    const double k_antipodal = kernel_K_complement(spec, 2.0);
    for (std::size_t i = 0; i < m; ++i) {
      const double psi = profile.values[i];
      const double other = profile.values[1 - i];
      out[i] = std::abs(psi * A + k_antipodal * (psi - other) - reaction(psi));
    }
  } else {
    // σ = tθ + sqrt(1-t^2) ω with ω on the (n-2)-sphere orthogonal to θ; the
    // kernel depends on t only, so it is cached once at fixed nodes.
    const quad::FixedNodes tn = quad::tanh_sinh_nodes(-1.0, 1.0 - opt.cutoff_delta, opt.kernel_step);
    std::vector<double> kernel(tn.x.size()), measure(tn.x.size());
    parallel_for(tn.x.size(), [&](std::size_t k) {
      const double one_minus_t = opt.cutoff_delta + tn.dist_b[k];
      const double one_plus_t = tn.dist_a[k];
      kernel[k] = kernel_K_complement(spec, one_minus_t);
      const double wexp = 0.5 * (n - 3);
      measure[k] = tn.w[k] * (wexp == 0.0 ? 1.0 : std::pow(one_minus_t * one_plus_t, wexp));
    }, opt.exec);

    // Azimuthal mean over cos φ with density (1-x^2)^{(n-4)/2}; two points for n = 2.
    quad::Rule az;
    if (n == 2) {
      az.nodes = {-1.0, 1.0};
      az.weights = {0.5, 0.5};
    } else {
      const double e = 0.5 * (n - 4);
      az = quad::gauss_jacobi(opt.azimuth_nodes, e, e);
      double total = 0.0;
      for (double w : az.weights) total += w;
      for (double& w : az.weights) w /= total;
    }
    const double area = sphere_area(n - 1);

    parallel_for(m, [&](std::size_t i) {
      const double ci = profile.nodes[i];
      const double si = std::sqrt(std::max(0.0, 1.0 - ci * ci));
      const double psi = profile.values[i];
      double integral = 0.0;
      for (std::size_t k = 0; k < tn.x.size(); ++k) {
        const double t = tn.x[k];
        const double st = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
        double mean = 0.0;
        for (std::size_t j = 0; j < az.nodes.size(); ++j) {
          const double c = std::clamp(t * ci + st * si * az.nodes[j], -1.0, 1.0);
          mean += az.weights[j] * profile(c);
        }
        integral += measure[k] * kernel[k] * (psi - mean);
      }
      out[i] = std::abs(psi * A + area * integral - reaction(psi));
    }, opt.exec);
  }
  double worst = 0.0;
  for (double v : out) worst = std::max(worst, v);
  return worst;
}

}  // namespace fhle
