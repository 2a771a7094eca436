#include "fhle/extension.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

#include "fhle/quadrature.hpp"
#include "fhle/specfun.hpp"

namespace fhle {

namespace {

void require_extension_order(int n, double s) {
  if (n < 1) fail(ErrorKind::InvalidParameter, "n must be >= 1");
  if (!(s > 0.0 && s < 1.0)) fail(ErrorKind::UnsupportedOrder, "the extension needs 0 < s < 1");
}

// ∫_{S^{n-1}} y^{2s} (|x - ρσ|^2 + y^2)^{-m} dσ for |x| = r, written with
// A = (r-ρ)^2 + y^2 and B = 2rρ, so |x-ρσ|^2 + y^2 = A + B(1-c).
double angular_kernel(int n, double s, double r, double rho, double y) {
  const double m = 0.5 * n + s;
  const double A = (r - rho) * (r - rho) + y * y;
  const double B = 2.0 * r * rho;
  const double y2s = std::pow(y, 2.0 * s);
  if (n == 1) {
    const double far = (r + rho) * (r + rho) + y * y;
    return y2s * (std::pow(A, -m) + std::pow(far, -m));
  }
  if (n == 3) {
    // ∫_{-1}^{1} (A + B(1-c))^{-m} dc = (A^{1-m} - (A+2B)^{1-m}) / (B(m-1)),
    // written with expm1/log1p so it stays accurate as B -> 0.
    const double x = 2.0 * B / A;
    if (x == 0.0) return 2.0 * M_PI * y2s * 2.0 * std::pow(A, -m);
    const double diff = -std::expm1((1.0 - m) * std::log1p(x));
    return 2.0 * M_PI * y2s * std::pow(A, 1.0 - m) * diff / (B * (m - 1.0));
  }
  const double wexp = 0.5 * (n - 3);
  auto f = [&](double, double u, double v) {
    const double w = wexp == 0.0 ? 1.0 : std::pow(u * v, wexp);
    return w * std::pow(A + B * u, -m);
  };
  quad::TanhSinhOptions opt;
  opt.rel_tol = 1e-13;
  opt.max_level = 12;
  double total;
  const double split = (B > 0.0) ? A / B : 2.0;
  if (split < 1.0) {
    auto left = quad::tanh_sinh([&](double x, double, double) { return f(0.0, x, 2.0 - x); }, 0.0, split, opt);
    auto right = quad::tanh_sinh([&](double x, double, double db) { return f(0.0, x, db); }, split, 2.0, opt);
    total = left.value + right.value;
  } else {
    total = quad::tanh_sinh(f, 0.0, 2.0, opt).value;
  }
  return sphere_area(n - 1) * y2s * total;
}

double integrate_poisson_mass(int n, double s, double y) {
  const double m = 0.5 * n + s;
  quad::TanhSinhOptions opt;
  opt.rel_tol = 1e-14;
  opt.max_level = 12;
  auto f = [&](double rho, double) {
    return std::pow(rho, n - 1.0) * std::pow(y, 2.0 * s) * std::pow(rho * rho + y * y, -m);
  };
  return sphere_area(n) * quad::exp_sinh(f, 0.0, y, opt).value;
}

}  // namespace

double poisson_normalization(int n, double s) {
  require_extension_order(n, s);
  static std::mutex guard;
  static std::map<std::pair<int, double>, double> cache;
  const auto key = std::make_pair(n, s);
  {
    std::lock_guard<std::mutex> lock(guard);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double value = 1.0 / integrate_poisson_mass(n, s, 1.0);
  std::lock_guard<std::mutex> lock(guard);
  return cache.emplace(key, value).first->second;
}

double poisson_mass(int n, double s, double y) {
  require_extension_order(n, s);
  if (!(y > 0.0)) fail(ErrorKind::InvalidParameter, "height must be positive");
  return poisson_normalization(n, s) * integrate_poisson_mass(n, s, y);
}

double extend_point(const RadialProfile& u, int n, double s, double r, double y, const ExtendOptions& opt) {
  require_extension_order(n, s);
  if (!(y > 0.0)) return u(r);
  const double pns = poisson_normalization(n, s);
  const double L = u.scale();
  const double rmax = u.r_max();

  if (u.is_sampled() && u.tail().kind == TailModel::Kind::None) {
    // Poisson mass outside the sampled ball, bounded above by the mass of
    // {|t - x| > r_max - r}.
    const double gap = rmax - r;
    const double mass = gap > 0.0 ? pns * sphere_area(n) * std::pow(y / gap, 2.0 * s) / (2.0 * s) : 1.0;
    if (std::abs(u(rmax)) * mass > opt.tail_tolerance)
      fail(ErrorKind::TailUnspecified, "sampled profile needs a tail model at this point");
  }

  auto integrand = [&](double rho) {
    return u(rho) * std::pow(rho, n - 1.0) * angular_kernel(n, s, r, rho, y);
  };

  // Breakpoints: the peak of the kernel at ρ = r (width y), the profile's own
  // scale, and the end of the sampled range.
  std::set<double> cuts;
  for (double k = 1.0; k < 1e4; k *= 4.0) {
    cuts.insert(r + y * k);
    if (r - y * k > 0.0) cuts.insert(r - y * k);
  }
  cuts.insert(r);
  for (double k = 0.125; k <= 64.0; k *= 2.0) cuts.insert(L * k);
  const double T = std::max(r + 64.0 * std::max(y, L), 64.0 * L);
  if (std::isfinite(rmax) && rmax < T) cuts.insert(rmax);
  std::vector<double> breaks;
  for (double c : cuts)
    if (c > 0.0 && c < T) breaks.push_back(c);

  quad::AdaptiveOptions ao;
  ao.rel_tol = opt.rel_tol;
  const double body = quad::gauss_kronrod(integrand, 0.0, T, breaks, ao).value;

  quad::TanhSinhOptions to;
  to.rel_tol = 1e-12;
  const double tail = quad::exp_sinh([&](double rho, double) { return integrand(rho); }, T, T, to).value;
  return pns * (body + tail);
}

HalfSpaceField extend_radial(const RadialProfile& u, const HalfSpaceGrid& grid, int n, double s,
                             const ExtendOptions& opt) {
  require_extension_order(n, s);
  grid.validate();
  HalfSpaceField field;
  field.grid = grid;
  field.params = ProblemParams::make(n, s, 0.0, 2.0);
  field.values.assign(grid.nr() * grid.ny(), 0.0);
  const std::size_t nr = grid.nr();
  parallel_for(field.values.size(), [&](std::size_t k) {
    field.values[k] = extend_point(u, n, s, grid.r[k % nr], grid.y[k / nr], opt);
  }, opt.exec);
  for (double r : grid.r) field.boundary.push_back(u(r));
  return field;
}

double degenerate_residual(const HalfSpaceField& field) {
  const HalfSpaceGrid& g = field.grid;
  g.validate();
  if (g.nr() < 4 || g.ny() < 4) fail(ErrorKind::GridTooCoarse, "residual needs at least 4 nodes per direction");
  const int n = field.params.n;
  const double s = field.params.s;
  const double w = 1.0 - 2.0 * s;
  const double scale = field.max_abs();
  if (scale == 0.0) return 0.0;

  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < g.ny(); ++j) {
    const double ym = g.y[j - 1], y0 = g.y[j], yp = g.y[j + 1];
    const double p2s_m = std::pow(ym, 2.0 * s), p2s_0 = std::pow(y0, 2.0 * s), p2s_p = std::pow(yp, 2.0 * s);
    for (std::size_t i = 0; i + 1 < g.nr(); ++i) {
      const double u0 = field.at(i, j);
      // Height flux y^{1-2s} ∂_y u at the half-levels, exact for y^{2s}.
      const double fp = 2.0 * s * (field.at(i, j + 1) - u0) / (p2s_p - p2s_0);
      const double fm = 2.0 * s * (u0 - field.at(i, j - 1)) / (p2s_0 - p2s_m);
      const double div_y = (fp - fm) / (0.5 * (yp - ym));

      // Radial part: finite volumes with exact cell volumes in r^{n-1} dr.
      double lap_r;
      const double rp = g.r[i + 1];
      if (i == 0) {
        const double face = 0.5 * rp;
        const double vol = std::pow(face, n) / n;
        const double flux = std::pow(face, n - 1.0) * (field.at(1, j) - u0) / rp;
        lap_r = flux / vol;
      } else {
        const double rm = g.r[i - 1], r0 = g.r[i];
        const double fr = 0.5 * (r0 + rp), fl = 0.5 * (rm + r0);
        const double vol = (std::pow(fr, n) - std::pow(fl, n)) / n;
        const double flux_r = std::pow(fr, n - 1.0) * (field.at(i + 1, j) - u0) / (rp - r0);
        const double flux_l = std::pow(fl, n - 1.0) * (u0 - field.at(i - 1, j)) / (r0 - rm);
        lap_r = (flux_r - flux_l) / vol;
      }
      const double weight = std::pow(y0, w);
      const double residual = weight * lap_r + div_y;
      worst = std::max(worst, std::abs(residual) / (weight * scale));
    }
  }
  return worst;
}

SampledRadial neumann_trace(const HalfSpaceField& field, const NeumannOptions& opt) {
  const HalfSpaceGrid& g = field.grid;
  g.validate();
  const double s = field.params.s;
  if (!(s > 0.0 && s < 1.0)) fail(ErrorKind::UnsupportedOrder, "the Neumann trace needs 0 < s < 1");
  if (opt.levels < 3) fail(ErrorKind::GridTooCoarse, "need at least 3 extrapolation levels");
  std::size_t usable = 0;
  while (usable < g.ny() && g.y[usable] < 0.1 * opt.radial_scale) ++usable;
  if (usable < 3) fail(ErrorKind::GridTooCoarse, "fewer than 3 heights below 0.1 * radial scale");
  const std::size_t K = std::min<std::size_t>(static_cast<std::size_t>(opt.levels), usable);

  // (u_e - u)/y^{2s} = b0 + Σ c_k y^{e_k}, e_k the ordered exponents of
  // {2-2s, 2, 4-2s, 4, ...}; the trace is -2s b0.
  std::vector<double> expo;
  for (int k = 1; static_cast<int>(expo.size()) < static_cast<int>(K); ++k) {
    expo.push_back(2.0 * k - 2.0 * s);
    expo.push_back(2.0 * k);
  }
  std::sort(expo.begin(), expo.end());

  auto solve = [&](std::size_t levels, const std::vector<double>& d) {
    Eigen::MatrixXd M(levels, levels);
    Eigen::VectorXd rhs(levels);
    for (std::size_t j = 0; j < levels; ++j) {
      const double yj = g.y[j] / g.y[0];  // scaled for conditioning
      M(j, 0) = 1.0;
      for (std::size_t k = 1; k < levels; ++k) M(j, k) = std::pow(yj, expo[k - 1]);
      rhs(j) = d[j];
    }
    return Eigen::VectorXd(M.colPivHouseholderQr().solve(rhs))(0);
  };

  const double scale = std::max(field.max_abs(), 1e-300);
  SampledRadial out;
  out.r = g.r;
  out.values.resize(g.nr());
  for (std::size_t i = 0; i < g.nr(); ++i) {
    std::vector<double> d(K);
    for (std::size_t j = 0; j < K; ++j) d[j] = (field.at(i, j) - field.boundary[i]) / std::pow(g.y[j], 2.0 * s);
    const double full = solve(K, d);
    const double reduced = solve(K - 1, d);
    if (std::abs(full - reduced) * 2.0 * s > 10.0 * opt.tolerance * scale)
      fail(ErrorKind::ExtrapolationUnstable, "extrapolants disagree at r=" + std::to_string(g.r[i]));
    out.values[i] = -2.0 * s * full;
  }
  return out;
}

}  // namespace fhle
