#include "fhle/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fhle/error.hpp"
#include "fhle/quadrature.hpp"
#include "fhle/specfun.hpp"

namespace fhle {

HalfSpaceField rescale(const HalfSpaceField& field, double lambda) {
  return rescale(field, lambda, field.params.beta());
}

HalfSpaceField rescale(const HalfSpaceField& field, double lambda, double degree) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) fail(ErrorKind::InvalidParameter, "rescale: lambda must be > 0");
  const double factor = std::pow(lambda, degree);
  HalfSpaceField out;
  out.grid = field.grid;
  out.params = field.params;
  if (field.has_evaluator()) {
    auto inner = field.exact;
    auto f = [inner, lambda, factor](double r, double y) { return factor * inner(lambda * r, lambda * y); };
    return HalfSpaceField::from_function(field.grid, field.params, f, true);
  }
  const auto& g = field.grid;
  if (lambda * g.r.back() > g.r.back() * (1.0 + 1e-12) || lambda * g.y.back() > g.y.back() * (1.0 + 1e-12))
    fail(ErrorKind::DomainExceeded, "rescale: lambda*grid leaves the sampled domain");
  out.values.resize(field.values.size());
  for (std::size_t j = 0; j < g.ny(); ++j)
    for (std::size_t i = 0; i < g.nr(); ++i)
      out.at(i, j) = factor * field.value(std::min(lambda * g.r[i], g.r.back()), std::min(lambda * g.y[j], g.y.back()));
  out.boundary.resize(g.nr());
  for (std::size_t i = 0; i < g.nr(); ++i)
    out.boundary[i] = factor * field.boundary_value(std::min(lambda * g.r[i], g.r.back()));
  return out;
}

namespace {

constexpr double kFirstFloor = 1e-12;   // heights below floor·ρ reuse the derivative at the floor
constexpr double kSecondFloor = 1e-3;
constexpr double kSecondEtaFactor = 5.0;

double d1(double fm2, double fm1, double fp1, double fp2, double h) {
  return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
}
double d2(double fm2, double fm1, double f0, double fp1, double fp2, double h) {
  return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
}

struct Probe {
  const HalfSpaceField& f;
  double eta;
  int n;
  double b;

  double u(double r, double y) const { return f.value(r, y); }

  double ur(double r, double y, double rho) const {
    const double h = eta * rho;
    return d1(u(r - 2 * h, y), u(r - h, y), u(r + h, y), u(r + 2 * h, y), h);
  }
  double uy(double r, double y, double rho) const {
    const double ye = std::max(y, kFirstFloor * rho);
    const double h = eta * std::min(rho, ye);
    return d1(u(r, ye - 2 * h), u(r, ye - h), u(r, ye + h), u(r, ye + 2 * h), h);
  }
  // Derivative along the ray through (r, y), at radius ρ = |(r, y)|.
  double urho(double r, double y, double rho) const {
    auto g = [&](double t) { return u(t * r, t * y); };
    return d1(g(1 - 2 * eta), g(1 - eta), g(1 + eta), g(1 + 2 * eta), eta) / rho;
  }

  double delta_b(double r, double y, double rho) const {
    const double e2 = kSecondEtaFactor * eta;
    const double ye = std::max(y, kSecondFloor * rho);
    const double hy = e2 * std::min(rho, ye);
    const double hr = e2 * rho;
    const double c = u(r, ye);
    const double yy = d2(u(r, ye - 2 * hy), u(r, ye - hy), c, u(r, ye + hy), u(r, ye + 2 * hy), hy);
    const double y1 = d1(u(r, ye - 2 * hy), u(r, ye - hy), u(r, ye + hy), u(r, ye + 2 * hy), hy);
    const double rr = d2(u(r - 2 * hr, ye), u(r - hr, ye), c, u(r + hr, ye), u(r + 2 * hr, ye), hr);
    double radial = rr;
    if (n > 1) {
      double ur_over_r;
      if (r < hr) {
        // u_r/r = (u_rr(r) + 2 u_rr(0))/3 + O(r^4) for fields even in r
        const double c0 = u(0.0, ye);
        const double rr0 = d2(u(2 * hr, ye), u(hr, ye), c0, u(hr, ye), u(2 * hr, ye), hr);
        ur_over_r = (rr + 2.0 * rr0) / 3.0;
      } else {
        ur_over_r = d1(u(r - 2 * hr, ye), u(r - hr, ye), u(r + hr, ye), u(r + 2 * hr, ye), hr) / r;
      }
      radial += (n - 1) * ur_over_r;
    }
    return radial + yy + (b / ye) * y1;
  }
};

struct Integrator {
  int n;
  double rel_tol;
  int max_level;
  Execution exec;

  quad::TanhSinhOptions inner_opt() const {
    quad::TanhSinhOptions o;
    o.rel_tol = 0.1 * rel_tol;
    o.abs_tol = 1e-300;
    o.max_level = max_level;
    return o;
  }
  quad::TanhSinhOptions outer_opt() const {
    quad::TanhSinhOptions o;
    o.rel_tol = rel_tol;
    o.abs_tol = 1e-300;
    o.max_level = max_level;
    return o;
  }

  // ∫_{∂B_ρ ∩ R^{n+1}_+} y^w F(r, y) dσ for a fixed radius ρ.
  template <class F>
  double sphere(double rho, double w, F&& F_) const {
    auto g = [&](double, double da, double db) {
      const double cs = std::sin(db);
      const double y = rho * std::sin(da);
      const double r = rho * cs;
      const double jac = n == 1 ? 1.0 : std::pow(cs, n - 1);
      if (jac == 0.0 || y == 0.0) return 0.0;
      return jac * std::pow(y, w) * F_(r, y, rho);
    };
    const auto res = quad::tanh_sinh(g, 0.0, 0.5 * M_PI, inner_opt(), Execution::Serial);
    return sphere_area(n) * std::pow(rho, n) * res.value;
  }

  // ∫_{B_λ ∩ R^{n+1}_+} y^w F(r, y) dX.
  template <class F>
  double ball(double lambda, double w, F&& F_) const {
    auto g = [&](double rho, double, double) {
      // Finite-difference steps scale with ρ; below this their rounding noise overflows.
      if (rho < 1e-60 * lambda) return 0.0;
      return sphere(rho, w, F_);
    };
    return quad::tanh_sinh(g, 0.0, lambda, outer_opt(), exec).value;
  }

  // ∫_{B_λ ∩ ∂R^{n+1}_+} |x|^a |u|^{q} dx.
  double boundary(const HalfSpaceField& f, double lambda, double a, double q) const {
    auto g = [&](double r, double, double) {
      const double v = std::abs(f.boundary_value(r));
      if (r == 0.0 || v == 0.0) return 0.0;
      // log form: singular traces overflow |u|^q near r = 0 before the weight cancels it
      return std::exp((n - 1 + a) * std::log(r) + q * std::log(v));
    };
    return sphere_area(n) * quad::tanh_sinh(g, 0.0, lambda, outer_opt(), exec).value;
  }
};

void require_coverage(const HalfSpaceField& field, double lambda, double reach) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) fail(ErrorKind::InvalidParameter, "lambda must be > 0");
  if (field.has_evaluator()) return;
  const auto& g = field.grid;
  if (g.nr() < 4 || g.ny() < 4) fail(ErrorKind::GridTooCoarse, "energy needs at least 4 nodes per direction");
  if (lambda * reach > std::min(g.r.back(), g.y.back()))
    fail(ErrorKind::DomainExceeded, "field does not cover the ball of radius lambda");
}

int level_cap(const HalfSpaceField& f) { return f.has_evaluator() ? 8 : 6; }

double first_order_coefficient(const ProblemParams& p, SphereCoefficient c) {
  const double num = p.s + 0.5 * p.a;
  return c == SphereCoefficient::PMinusOne ? num / (p.p - 1.0) : num / (p.p + 1.0);
}

void require_first_order(const HalfSpaceField& field) {
  const double s = field.params.s;
  if (!(s > 0.0 && s < 1.0)) fail(ErrorKind::UnsupportedOrder, "first-order energy needs 0 < s < 1");
}

}  // namespace

EnergyParts energy_first_order_parts(const HalfSpaceField& field, double lambda, const EnergyOptions& opt) {
  require_first_order(field);
  require_coverage(field, lambda, 1.0 + 3.0 * opt.fd_eta);
  const auto& P = field.params;
  const double w = 1.0 - 2.0 * P.s;
  const double e = P.energy_exponent() - P.n;
  const Probe probe{field, opt.fd_eta, P.n, P.b()};
  const Integrator I{P.n, opt.rel_tol, level_cap(field), opt.exec};

  const double grad = I.ball(lambda, w, [&](double r, double y, double rho) {
    const double gr = probe.ur(r, y, rho), gy = probe.uy(r, y, rho);
    return gr * gr + gy * gy;
  });
  const double nonlin = I.boundary(field, lambda, P.a, P.p + 1.0);
  const double sph = I.sphere(lambda, w, [&](double r, double y, double) {
    const double v = probe.u(r, y);
    return v * v;
  });

  EnergyParts out;
  const double scale = std::pow(lambda, e);
  out.bulk = scale * 0.5 * grad;
  out.nonlinear = -scale * kappa_s(P.s) / (P.p + 1.0) * nonlin;
  out.sphere = scale / lambda * first_order_coefficient(P, opt.sphere) * sph;
  return out;
}

double energy_first_order(const HalfSpaceField& field, double lambda, const EnergyOptions& opt) {
  return energy_first_order_parts(field, lambda, opt).total();
}

double energy_derivative_first_order(const HalfSpaceField& field, double lambda, const EnergyOptions& opt) {
  require_first_order(field);
  require_coverage(field, lambda, 1.0 + 3.0 * opt.fd_eta);
  const auto& P = field.params;
  const double gamma = P.beta();
  const Probe probe{field, opt.fd_eta, P.n, P.b()};
  const Integrator I{P.n, opt.rel_tol, level_cap(field), opt.exec};
  const double v = I.sphere(lambda, 1.0 - 2.0 * P.s, [&](double r, double y, double rho) {
    const double q = probe.urho(r, y, rho) + gamma * probe.u(r, y) / rho;
    return q * q;
  });
  return std::pow(lambda, P.energy_exponent() - P.n) * v;
}

EnergyCurve energy_curve(const HalfSpaceField& field, const std::vector<double>& lambdas, const EnergyOptions& opt) {
  for (std::size_t k = 1; k < lambdas.size(); ++k)
    if (!(lambdas[k] > lambdas[k - 1])) fail(ErrorKind::InvalidParameter, "lambdas must be strictly increasing");
  EnergyCurve c;
  c.lambdas = lambdas;
  c.values.assign(lambdas.size(), 0.0);
  c.parts.assign(lambdas.size(), EnergyParts{});
  c.rel_tol = opt.rel_tol;
  c.fd_eta = opt.fd_eta;
  EnergyOptions inner = opt;
  inner.exec = Execution::Serial;
  parallel_for(
      lambdas.size(),
      [&](std::size_t k) {
        c.parts[k] = energy_first_order_parts(field, lambdas[k], inner);
        c.values[k] = c.parts[k].total();
      },
      opt.exec);
  return c;
}

HalfSpaceField delta_b(const HalfSpaceField& field) {
  const auto& g = field.grid;
  g.validate();
  if (g.nr() < 4 || g.ny() < 4) fail(ErrorKind::GridTooCoarse, "delta_b needs at least 4 nodes per direction");
  const int n = field.params.n;
  const double b = g.weight_exponent;
  HalfSpaceField out;
  out.params = field.params;
  out.grid.weight_exponent = b;
  out.grid.r.assign(g.r.begin(), g.r.end() - 1);
  out.grid.y.assign(g.y.begin() + 1, g.y.end() - 1);
  const std::size_t nr = out.grid.nr(), ny = out.grid.ny();
  out.values.resize(nr * ny);

  // Three-point derivatives on a nonuniform stencil, exact for quadratics.
  auto second = [](double um, double u0, double up, double hm, double hp) {
    return 2.0 * ((up - u0) / hp - (u0 - um) / hm) / (hp + hm);
  };
  auto first = [](double um, double u0, double up, double hm, double hp) {
    return (hm * hm * up - hp * hp * um + (hp * hp - hm * hm) * u0) / (hp * hm * (hp + hm));
  };

  for (std::size_t jj = 0; jj < ny; ++jj) {
    const std::size_t j = jj + 1;
    const double hm = g.y[j] - g.y[j - 1], hp = g.y[j + 1] - g.y[j];
    for (std::size_t i = 0; i < nr; ++i) {
      const double u0 = field.at(i, j);
      const double uyy = second(field.at(i, j - 1), u0, field.at(i, j + 1), hm, hp);
      const double uy = first(field.at(i, j - 1), u0, field.at(i, j + 1), hm, hp);
      double radial;
      if (i == 0) {
        const double h = g.r[1];
        radial = n * 2.0 * (field.at(1, j) - u0) / (h * h);
      } else {
        const double rm = g.r[i] - g.r[i - 1], rp = g.r[i + 1] - g.r[i];
        const double um = field.at(i - 1, j), up = field.at(i + 1, j);
        radial = second(um, u0, up, rm, rp) + (n - 1) * first(um, u0, up, rm, rp) / g.r[i];
      }
      out.values[jj * nr + i] = radial + uyy + (b / g.y[j]) * uy;
    }
  }
  // Boundary trace: quadratic extrapolation in y from the three lowest levels.
  out.boundary.resize(nr);
  const double* yl = &out.grid.y[0];
  for (std::size_t i = 0; i < nr; ++i) {
    double v = 0.0;
    for (int a = 0; a < 3; ++a) {
      double w = 1.0;
      for (int c = 0; c < 3; ++c)
        if (c != a) w *= (0.0 - yl[c]) / (yl[a] - yl[c]);
      v += w * out.values[a * nr + i];
    }
    out.boundary[i] = v;
  }
  return out;
}

DimensionReport dimension_conditions(const ProblemParams& P) {
  DimensionReport d;
  d.n = P.n;
  d.first_rhs = (P.p + 4 * P.s + 2 * P.a - 1) / (P.p + 2 * P.s + P.a - 1) + P.beta() - P.b();
  d.second_rhs = P.energy_exponent();
  d.first_holds = d.n > d.first_rhs;
  d.second_holds = d.n > d.second_rhs;
  d.implication_consistent = !d.second_holds || d.first_holds;
  return d;
}

HigherOrderParts energy_higher_order_parts(const HalfSpaceField& field, double lambda, double fd_step,
                                           const HigherOrderOptions& opt) {
  const auto& P = field.params;
  if (!(P.s > 1.0 && P.s < 2.0)) fail(ErrorKind::UnsupportedOrder, "higher-order energy needs 1 < s < 2");
  const DimensionReport dim = dimension_conditions(P);
  if (!dim.first_holds) {
    std::ostringstream m;
    m.precision(17);
    m << "n = " << dim.n << " must exceed " << dim.first_rhs;
    fail(ErrorKind::DimensionConditionViolated, m.str());
  }
  const double h = fd_step > 0.0 ? fd_step : 1e-3 * lambda;
  if (!(h < lambda)) fail(ErrorKind::InvalidParameter, "fd_step must be smaller than lambda");
  require_coverage(field, (lambda + h), 1.0 + 3.0 * kSecondEtaFactor * opt.fd_eta);

  const int n = P.n;
  const double s = P.s, a = P.a, p = P.p, b = P.b();
  const double gamma = P.beta();
  const double w = 3.0 - 2.0 * s;
  const double e = P.energy_exponent() - n;
  const double K = (s + 0.5 * a) / (p - 1.0) * ((p + 2 * s + a - 1.0) / (p - 1.0) - n - b);
  const Probe probe{field, opt.fd_eta, n, b};
  const Integrator I{n, opt.rel_tol, level_cap(field), opt.exec};

  auto mass = [&](double r) {
    return I.sphere(r, w, [&](double x, double y, double) {
      const double v = probe.u(x, y);
      return v * v;
    });
  };
  auto radial = [&](double r) {
    return I.sphere(r, w, [&](double x, double y, double rho) {
      const double q = gamma * probe.u(x, y) / rho + probe.urho(x, y, rho);
      return q * q;
    });
  };
  auto tangential = [&](double r) {
    return I.sphere(r, w, [&](double x, double y, double rho) {
      const double gr = probe.ur(x, y, rho), gy = probe.uy(x, y, rho), gp = probe.urho(x, y, rho);
      return gr * gr + gy * gy - gp * gp;
    });
  };
  auto ddr = [&](auto&& fn) { return (fn(lambda + h) - fn(lambda - h)) / (2.0 * h); };

  const double e_mass = -3.0 + 2.0 * s + 2.0 * gamma - n;
  const double e_mass_rate = 2.0 * gamma + 2.0 * s - 2.0 - n;
  const double e_radial = 2.0 * gamma + 2.0 * s - 3.0 - n;

  HigherOrderParts out;
  const double bulk = I.ball(lambda, w, [&](double x, double y, double rho) {
    const double v = probe.delta_b(x, y, rho);
    return 0.5 * v * v;
  });
  const double re = std::pow(lambda, e);
  out.bulk = re * bulk;
  out.nonlinear = -re * opt.c_ns / (p + 1.0) * I.boundary(field, lambda, a, p + 1.0);
  out.sphere_mass = -K * std::pow(lambda, e_mass) * mass(lambda);
  out.sphere_mass_rate = -K * ddr([&](double r) { return std::pow(r, e_mass_rate) * mass(r); });
  out.radial_rate = 0.5 * lambda * lambda * lambda * ddr([&](double r) { return std::pow(r, e_radial) * radial(r); });
  out.tangential_rate = 0.5 * ddr([&](double r) { return std::pow(r, e) * tangential(r); });
  out.tangential = 0.5 * std::pow(lambda, e - 1.0) * tangential(lambda);
  return out;
}

double energy_higher_order(const HalfSpaceField& field, double lambda, double fd_step, const HigherOrderOptions& opt) {
  return energy_higher_order_parts(field, lambda, fd_step, opt).total();
}

}  // namespace fhle
