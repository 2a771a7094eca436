#include "fhle/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "fhle/error.hpp"
#include "fhle/exponents.hpp"
#include "fhle/quadrature.hpp"
#include "fhle/specfun.hpp"

namespace fhle {

void CutoffSpec::validate(int n) const {
  if (n < 1) fail(ErrorKind::InvalidParameter, "n must be >= 1");
  if (!(m > 0.5 * n)) fail(ErrorKind::NonIntegrable, "decay exponent m must exceed n/2");
  if (!(R >= 1.0) || !std::isfinite(R)) fail(ErrorKind::InvalidParameter, "cutoff scale R must be >= 1");
  if (phi == PhiModel::SmoothBump && !(inner > 0.0 && inner < outer))
    fail(ErrorKind::InvalidParameter, "bump needs 0 < inner < outer");
}

double CutoffSpec::eta(double radius) const { return std::pow(1.0 + radius * radius, -0.5 * m); }

double CutoffSpec::phi_value(double radius) const {
  if (phi == PhiModel::One) return 1.0;
  const double a = inner * R, b = outer * R;
  if (radius <= a) return 1.0;
  if (radius >= b) return 0.0;
  const double t = (b - radius) / (b - a);
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double CutoffSpec::eta_R(double radius) const { return eta(radius / R) * phi_value(radius); }

namespace {

double phi_derivative(const CutoffSpec& c, double radius) {
  if (c.phi == PhiModel::One) return 0.0;
  const double a = c.inner * c.R, b = c.outer * c.R;
  if (radius <= a || radius >= b) return 0.0;
  const double t = (b - radius) / (b - a);
  return -30.0 * t * t * (1.0 - t) * (1.0 - t) / (b - a);
}

// Radial cutoff profile with its derivative and the radii where it changes character.
struct Profile {
  std::function<double(double)> f;
  double df0 = 0.0;                // f'(|x|) at the evaluation point
  double scale = 1.0;              // length over which f varies
  std::vector<double> features;    // radii of reduced smoothness or fast variation
};

// n = 3, |x| = r > 0: integrating the sphere average in q = |y| and swapping the
// order with t = |x-y| leaves
//   ρ = 2π/(r(1+2s)) ∫_0^∞ q (f(r)-f(q))^2 (|r-q|^{-1-2s} - (r+q)^{-1-2s}) dq.
double rho_three(const Profile& P, double r, double s, double rel_tol, double f0, double delta) {
  const double c = 2.0 * M_PI / (r * (1.0 + 2.0 * s));
  auto integrand = [&](double q) {
    const double d = f0 - P.f(q);
    return q * d * d * (std::pow(std::abs(r - q), -1.0 - 2.0 * s) - std::pow(r + q, -1.0 - 2.0 * s));
  };
  // |q-r| < δ: (f(r)-f(q))^2 ≈ f'(r)^2 (q-r)^2, the (r+q) part is O(δ^3)
  const double d = std::min(delta, 0.5 * r);
  double total = c * r * P.df0 * P.df0 * 2.0 * std::pow(d, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);

  std::vector<double> cuts{0.0, r - d, r + d};
  double far = r + P.scale;
  for (double f : P.features) {
    cuts.push_back(f);
    far = std::max(far, f);
  }
  for (double x : {r - P.scale, r + P.scale}) cuts.push_back(x);
  const double T = 4.0 * (far + P.scale);
  cuts.push_back(T);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> pts;
  for (double x : cuts) {
    if (x < 0.0 || x > T) continue;
    if (x > r - d && x < r + d) continue;
    if (pts.empty() || x > pts.back() + 1e-12 * T) pts.push_back(x);
  }
  quad::TanhSinhOptions opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = 1e-300;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k] == r - d) continue;  // the excluded window around q = r
    total += c * quad::tanh_sinh([&](double q, double, double) { return integrand(q); }, pts[k], pts[k + 1], opt).value;
  }
  total += c * quad::exp_sinh([&](double q, double) { return integrand(q); }, T, T, opt).value;
  return total;
}

double rho_generic(const Profile& P, double r, int n, double s, double rel_tol) {
  if (!(s > 0.0 && s < 1.0)) fail(ErrorKind::OutOfRange, "rho requires 0 < s < 1");
  if (!(r >= 0.0) || !std::isfinite(r)) fail(ErrorKind::InvalidParameter, "radius must be finite and >= 0");
  // ρ is even and smooth in x: ρ(r) = ρ(0) + O(r^2) on the profile's length scale
  if (r < 1e-8 * P.scale) r = 0.0;
  const double f0 = P.f(r);
  const double area = sphere_area(n);
  const double inner_area = n >= 2 ? sphere_area(n - 1) : 0.0;
  quad::TanhSinhOptions iopt;
  iopt.rel_tol = 0.1 * rel_tol;
  iopt.abs_tol = 1e-300;

  auto angular = [&](double t) -> double {
    if (n == 1) {
      const double d1 = f0 - P.f(r + t), d2 = f0 - P.f(std::abs(r - t));
      return d1 * d1 + d2 * d2;
    }
    if (r == 0.0) {
      const double d = f0 - P.f(t);
      return area * d * d;
    }
    auto g = [&](double, double da, double db) {
      // |x+tω|^2 from the nearer endpoint of c to avoid cancellation
      const double q = da < db ? (r - t) * (r - t) + 2.0 * r * t * da : (r + t) * (r + t) - 2.0 * r * t * db;
      const double d = f0 - P.f(std::sqrt(std::max(q, 0.0)));
      const double w = n == 3 ? 1.0 : std::pow(da * db, 0.5 * (n - 3));
      return w * d * d;
    };
    return inner_area * quad::tanh_sinh(g, -1.0, 1.0, iopt).value;
  };

  // Below δ the difference quotient loses digits; A(t) ~ t^2 |∇η|^2 |S^{n-1}|/n there.
  const double delta = 1e-7 * P.scale;
  if (n == 3 && r > 0.0) return rho_three(P, r, s, rel_tol, f0, delta);
  const double G = P.df0 * P.df0 * area / n;
  double total = G * std::pow(delta, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);

  std::vector<double> cuts{delta};
  double far = r + P.scale;
  for (double f : P.features) {
    for (double c : {std::abs(r - f), r + f, std::abs(r - f) - P.scale, std::abs(r - f) + P.scale}) cuts.push_back(c);
    far = std::max(far, r + f);
  }
  const double T = 4.0 * (far + P.scale);
  cuts.push_back(T);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> pts;
  for (double c : cuts)
    if (c >= delta && c <= T && (pts.empty() || c > pts.back() * (1.0 + 1e-12))) pts.push_back(c);

  quad::TanhSinhOptions oopt;
  oopt.rel_tol = rel_tol;
  oopt.abs_tol = 1e-300;
  auto integrand = [&](double t) { return std::pow(t, -1.0 - 2.0 * s) * angular(t); };
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    total += quad::tanh_sinh([&](double t, double, double) { return integrand(t); }, pts[k], pts[k + 1], oopt).value;
  total += quad::exp_sinh([&](double t, double) { return integrand(t); }, T, T, oopt).value;
  return total;
}

Profile eta_profile(const CutoffSpec& c, double r) {
  Profile P;
  P.f = [c](double x) { return c.eta(x); };
  P.df0 = -c.m * r * std::pow(1.0 + r * r, -0.5 * c.m - 1.0);
  P.scale = 1.0;
  P.features = {0.0};
  return P;
}

Profile eta_r_profile(const CutoffSpec& c, double r) {
  Profile P;
  P.f = [c](double x) { return c.eta_R(x); };
  const double z = r / c.R;
  const double de = -c.m * z * std::pow(1.0 + z * z, -0.5 * c.m - 1.0) / c.R;
  P.df0 = de * c.phi_value(r) + c.eta(z) * phi_derivative(c, r);
  P.features = {0.0};
  P.scale = c.R;
  if (c.phi == PhiModel::SmoothBump) {
    P.scale = c.R * std::min(1.0, c.outer - c.inner);
    P.features.push_back(c.inner * c.R);
    P.features.push_back(c.outer * c.R);
  }
  return P;
}

double rel_dev(double a, double b) { return std::abs(a - b) / std::abs(b); }

void require_radii(const std::vector<double>& radii, std::size_t min_count) {
  if (radii.size() < min_count) fail(ErrorKind::InvalidParameter, "not enough radii for the check");
  for (double R : radii)
    if (!(R > 0.0) || !std::isfinite(R)) fail(ErrorKind::InvalidParameter, "radii must be positive");
}

double spread(const std::vector<double>& radii, const std::vector<double>& values, double slope) {
  double lo = INFINITY, hi = 0.0;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double v = values[k] * std::pow(radii[k], -slope);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi / lo;
}

}  // namespace

double rho_eval(const CutoffSpec& spec, double x_radius, int n, double s, const RhoOptions& opt) {
  spec.validate(n);
  return rho_generic(eta_profile(spec, std::abs(x_radius)), std::abs(x_radius), n, s, opt.rel_tol);
}

double rho_r_eval(const CutoffSpec& spec, double x_radius, int n, double s, const RhoOptions& opt) {
  spec.validate(n);
  return rho_generic(eta_r_profile(spec, std::abs(x_radius)), std::abs(x_radius), n, s, opt.rel_tol);
}

double loglog_slope(const std::vector<double>& radii, const std::vector<double>& values) {
  if (radii.size() != values.size() || radii.size() < 2) fail(ErrorKind::InvalidParameter, "slope needs >= 2 points");
  double mx = 0, my = 0;
  const double k = static_cast<double>(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(values[i] > 0.0)) fail(ErrorKind::InvalidParameter, "log-log slope needs positive values");
    mx += std::log(radii[i]);
    my += std::log(values[i]);
  }
  mx /= k;
  my /= k;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double dx = std::log(radii[i]) - mx;
    sxy += dx * (std::log(values[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double singular_power_integral(const ProblemParams& P, double R) {
  const double e = P.n - P.energy_exponent();
  if (std::abs(e) < 1e-12) fail(ErrorKind::ExponentZero, "n = (2s(p+1)+2a)/(p-1): logarithmic case");
  if (e < 0.0) fail(ErrorKind::NonIntegrable, "|x|^a u_s^{p+1} is not integrable at the origin");
  const double A = singular_amplitude(P);
  return sphere_area(P.n) * std::pow(A, P.p + 1.0) * std::pow(R, e) / e;
}

ScalingReport singular_scaling_check(const ProblemParams& P, const std::vector<double>& radii) {
  require_radii(radii, 2);
  ScalingReport rep;
  rep.check = "singular_scaling";
  rep.params = P;
  rep.slope_expected = P.n - P.energy_exponent();
  rep.radii = radii;
  for (double R : radii) rep.values.push_back(singular_power_integral(P, R));
  rep.slope_measured = loglog_slope(radii, rep.values);
  rep.max_ratio = spread(radii, rep.values, rep.slope_expected);
  return rep;
}

ScalingReport finalu2_scaling_check(const ProblemParams& P, const CutoffSpec& spec, const std::vector<double>& radii,
                                    Execution exec) {
  require_radii(radii, 2);
  spec.validate(P.n);
  const double hi = 0.5 * P.n + 0.5 * P.s * (P.p + 1.0);
  if (!(spec.m < hi)) fail(ErrorKind::InvalidParameter, "m must lie below n/2 + s(p+1)/2");
  const double gamma = P.beta();
  const double e = P.n - P.energy_exponent();
  if (!(P.n > 2.0 * gamma)) fail(ErrorKind::NonIntegrable, "u_s^2 is not integrable at the origin");
  const double A = singular_amplitude(P);

  ScalingReport rep;
  rep.check = "finalu2_scaling";
  rep.params = P;
  rep.slope_expected = e;
  rep.radii = radii;
  // The check is a slope test at the 5e-2 level; tolerances are set for speed.
  RhoOptions ropt;
  ropt.rel_tol = 1e-7;
  quad::TanhSinhOptions opt;
  opt.rel_tol = 1e-6;
  opt.abs_tol = 1e-300;
  opt.max_level = 6;
  // ∫_{z_max}^∞ of the z^{-1-2γ-2s} tail is below 1e-10 relative
  const double z_max = 1e8;
  for (double R : radii) {
    CutoffSpec c = spec;
    c.R = R;
    // r = R z; the radial weight is |S^{n-1}| A^2 r^{n-1-2γ}
    auto f = [&](double z) {
      if (z > z_max) return 0.0;
      return std::pow(z, P.n - 1.0 - 2.0 * gamma) * rho_r_eval(c, R * z, P.n, P.s, ropt);
    };
    std::vector<double> pts{0.0, 1.0};
    if (c.phi == PhiModel::SmoothBump) pts = {0.0, c.inner, c.outer};
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
      acc += quad::tanh_sinh([&](double z, double, double) { return f(z); }, pts[k], pts[k + 1], opt, exec).value;
    acc += quad::exp_sinh([&](double z, double) { return f(z); }, pts.back(), 1.0, opt, exec).value;
    rep.values.push_back(sphere_area(P.n) * A * A * std::pow(R, P.n - 2.0 * gamma) * acc);
  }
  rep.slope_measured = loglog_slope(radii, rep.values);
  rep.max_ratio = spread(radii, rep.values, rep.slope_expected);
  return rep;
}

ScalingReport weighted_trace_scaling_check(const ProblemParams& P, const std::vector<double>& radii,
                                           const std::function<double(double, double)>& model) {
  require_radii(radii, 2);
  const double gamma = P.beta();
  // homogeneity of the supplied model
  for (double phi : {0.1, 0.7, 1.3}) {
    const double r = std::cos(phi), y = std::sin(phi);
    const double u1 = model(r, y), u2 = model(2.0 * r, 2.0 * y);
    if (std::abs(u2 - std::pow(2.0, -gamma) * u1) > 1e-9 * std::max(std::abs(u1), 1e-300))
      fail(ErrorKind::InvalidParameter, "model field is not homogeneous of degree -(2s+a)/(p-1)");
  }
  const double w = P.s < 1.0 ? 1.0 - 2.0 * P.s : 3.0 - 2.0 * P.s;
  const double k = P.n + w + 1.0 - 2.0 * gamma;
  if (std::abs(k) < 1e-12) fail(ErrorKind::ExponentZero, "weighted ball integral is logarithmic in R");
  if (k < 0.0) fail(ErrorKind::NonIntegrable, "weighted ball integral diverges at the origin");
  quad::TanhSinhOptions opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-300;
  const int n = P.n;
  const double theta = quad::tanh_sinh(
                           [&](double, double da, double db) {
                             const double c = std::sin(db), sn = std::sin(da);
                             const double u = model(c, sn);
                             return (n == 1 ? 1.0 : std::pow(c, n - 1)) * std::pow(sn, w) * u * u;
                           },
                           0.0, 0.5 * M_PI, opt)
                           .value;
  ScalingReport rep;
  rep.check = P.s < 1.0 ? "weighted_trace_scaling" : "weighted_trace_scaling_b";
  rep.params = P;
  rep.slope_expected = P.n + (P.s < 1.0 ? 2.0 : 4.0) - P.energy_exponent();
  rep.radii = radii;
  for (double R : radii) rep.values.push_back(sphere_area(n) * theta * std::pow(R, k) / k);
  rep.slope_measured = loglog_slope(radii, rep.values);
  rep.max_ratio = spread(radii, rep.values, rep.slope_expected);
  return rep;
}

ScalingReport rho_ratio_check(const CutoffSpec& spec, int n, double s, const std::vector<double>& radii,
                              Execution exec) {
  if (radii.empty()) fail(ErrorKind::InvalidParameter, "no radii");
  ScalingReport rep;
  rep.check = "rho_ratio";
  rep.params = ProblemParams{n, s, 0.0, 2.0};
  rep.radii = radii;
  rep.values.assign(radii.size(), 0.0);
  parallel_for(radii.size(), [&](std::size_t k) {
    const double x = radii[k];
    rep.values[k] = rho_eval(spec, x, n, s) * std::pow(1.0 + x * x, 0.5 * n + s);
  }, exec);
  const auto [lo, hi] = std::minmax_element(rep.values.begin(), rep.values.end());
  rep.max_ratio = *hi / *lo;
  return rep;
}

ScalingReport rho_r_bound_check(const CutoffSpec& spec, int n, double s, const std::vector<double>& radii,
                                Execution exec) {
  if (radii.empty()) fail(ErrorKind::InvalidParameter, "no radii");
  ScalingReport rep;
  rep.check = "rho_r_bound";
  rep.params = ProblemParams{n, s, 0.0, 2.0};
  rep.radii = radii;
  rep.values.assign(radii.size(), 0.0);
  parallel_for(radii.size(), [&](std::size_t k) {
    const double x = radii[k];
    const double e = spec.eta(x / spec.R);
    const double bound = (x > 0.0 ? e * e * std::pow(x, -n - 2.0 * s) : INFINITY) +
                         std::pow(spec.R, -2.0 * s) * rho_eval(spec, x / spec.R, n, s);
    rep.values[k] = rho_r_eval(spec, x, n, s) / bound;
  }, exec);
  rep.max_ratio = *std::max_element(rep.values.begin(), rep.values.end());
  return rep;
}

ScalingReport rho_r_scaling_check(const CutoffSpec& spec, int n, double s, const std::vector<double>& radii,
                                  Execution exec) {
  if (radii.empty()) fail(ErrorKind::InvalidParameter, "no radii");
  CutoffSpec one = spec;
  one.phi = PhiModel::One;
  ScalingReport rep;
  rep.check = "rho_r_scaling";
  rep.params = ProblemParams{n, s, 0.0, 2.0};
  rep.radii = radii;
  rep.values.assign(radii.size(), 0.0);
  parallel_for(radii.size(), [&](std::size_t k) {
    const double x = radii[k];
    rep.values[k] = rel_dev(rho_r_eval(one, x, n, s), std::pow(one.R, -2.0 * s) * rho_eval(one, x / one.R, n, s));
  }, exec);
  rep.max_ratio = *std::max_element(rep.values.begin(), rep.values.end());
  return rep;
}

}  // namespace fhle
