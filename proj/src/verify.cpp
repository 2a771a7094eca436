#include "fhle/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "fhle/error.hpp"
#include "fhle/estimates.hpp"
#include "fhle/exponents.hpp"
#include "fhle/extension.hpp"
#include "fhle/fraclap.hpp"
#include "fhle/io.hpp"
#include "fhle/kernels.hpp"
#include "fhle/monotonicity.hpp"
#include "fhle/specfun.hpp"

namespace fhle {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "constants") return Suite::Constants;
  if (name == "kernels") return Suite::Kernels;
  if (name == "extension") return Suite::Extension;
  if (name == "energy") return Suite::Energy;
  if (name == "estimates") return Suite::Estimates;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

namespace {

class Recorder {
 public:
  Recorder(std::string suite, const VerifyOptions& opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
  }

  // |measured - expected| <= tol·scale
  void near(const std::string& name, double measured, double expected, double tol, std::string note = {}) {
    const double t = tol * opt_.tolerance_scale;
    add(name, std::abs(measured - expected) <= t, measured, expected, t, std::move(note));
  }
  // measured <= bound·scale (measured is an error or a spread)
  void below(const std::string& name, double measured, double bound, std::string note = {}) {
    const double t = bound * opt_.tolerance_scale;
    add(name, measured <= t, measured, 0.0, t, std::move(note));
  }
  // A count of violations that must be zero.
  void none(const std::string& name, int violations, std::string note = {}) {
    add(name, violations == 0, violations, 0.0, 0.0, std::move(note));
  }
  void flag(const std::string& name, bool ok, double measured, double expected, std::string note = {}) {
    add(name, ok, measured, expected, 0.0, std::move(note));
  }
  // Runs body; an exception fails the named check instead of the suite.
  template <class F>
  void guard(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, NAN, NAN, 0.0, e.what());
    }
  }
  SuiteReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return report_;
  }
  const VerifyOptions& options() const { return opt_; }

 private:
  void add(const std::string& name, bool ok, double m, double e, double t, std::string note) {
    report_.checks.push_back({name, ok, m, e, t, std::move(note)});
  }
  VerifyOptions opt_;
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Supercritical tuples (n, s, a, p) with n > 2s and p > p_S, drawn from a fixed seed.
std::vector<ProblemParams> random_supercritical(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nd(1, 12);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<ProblemParams> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = nd(rng);
    const double s = u01(rng) < 0.5 ? 0.05 + 0.9 * u01(rng) : 1.05 + 0.9 * u01(rng);
    if (!(n > 2.0 * s)) continue;
    const double a = 3.0 * u01(rng);
    const double pS = sobolev_exponent(n, s, a);
    const double p = pS * (1.0 + std::exp(std::log(1e-3) + u01(rng) * std::log(1e5)));
    out.push_back(ProblemParams::make(n, s, a, p));
  }
  return out;
}

}  // namespace

SuiteReport verify_constants(const VerifyOptions& opt) {
  Recorder R("constants", opt);
  R.near("κ_0.5=1", kappa_s(0.5), 1.0, 1e-12);
  double worst = 0.0;
  for (int k = 1; k <= 9; ++k) worst = std::max(worst, std::abs(kappa_s(0.1 * k) * kappa_s(1.0 - 0.1 * k) - 1.0));
  R.below("κ_s·κ_{1−s}=1", worst, 1e-12, "s = 0.1..0.9");
  worst = 0.0;
  for (auto [n, s] : {std::pair{2, 0.5}, {3, 0.5}, {3, 0.75}, {5, 0.25}, {10, 0.5}})
    worst = std::max(worst, rel(lambda_alpha(n, s, 0.0), hardy_gamma(n, s)));
  R.below("λ(0)=Λ", worst, 1e-12, "5 (n,s) pairs");
  R.near("λ(1/3)=3^{-1/2} at (3,0.5)", lambda_alpha(3, 0.5, 1.0 / 3.0), 1.0 / std::sqrt(3.0), 1e-12);
  R.near("Λ_{3,0.5}=2/π", hardy_gamma(3, 0.5), 2.0 / M_PI, 1e-12);

  const auto panel = random_supercritical(100, 20240611);
  worst = 0.0;
  int flips = 0;
  for (const auto& P : panel) {
    const double m = stability_margin(P);
    worst = std::max(worst, rel(m, stability_margin_via_lambda(P)));
    const Verdict v = classify(P).verdict;
    const Verdict want = m > 0.0 ? Verdict::SupercriticalTheoremApplies : Verdict::SupercriticalTheoremSilent;
    if (v != want) ++flips;
  }
  R.below("stability margin: Gamma pattern = p·λ(α)−Λ route", worst, 1e-10, "100 random supercritical tuples");
  R.none("classify verdict follows the margin sign", flips, "100 random supercritical tuples");

  JlOptions jo;
  jo.exec = opt.exec;
  for (double a : {0.0, 1.0}) {
    R.guard("no JL root at (3,0.5,a)", [&] {
      const auto roots = jl_brackets(3, 0.5, a, 1e6, jo);
      std::ostringstream note;
      note << "a=" << a;
      R.none("no JL root at (3,0.5," + io::fmt(a) + ")", static_cast<int>(roots.size()), note.str());
    });
  }
  R.guard("JL root at (10,0.5,0)", [&] {
    const auto root = jl_threshold(10, 0.5, 0.0, 1e6, jo);
    if (!root) {
      R.flag("JL root at (10,0.5,0)", false, NAN, 0.0, "no sign change found");
      return;
    }
    const double m = stability_margin(ProblemParams::make(10, 0.5, 0.0, root->root));
    R.near("JL root at (10,0.5,0): margin(p_c)=0", m, 0.0, 1e-8, "p_c=" + io::fmt(root->root));
    const Verdict lo = classify(10, 0.5, 0.0, root->lo).verdict;
    const Verdict hi = classify(10, 0.5, 0.0, root->hi).verdict;
    R.flag("classify flips across p_c", lo == Verdict::SupercriticalTheoremApplies && hi == Verdict::SupercriticalTheoremSilent,
           hi == lo ? 0.0 : 1.0, 1.0, std::string(to_string(lo)) + " -> " + std::string(to_string(hi)));
  });
  return R.finish();
}

// Supercritical tuples with 0 < s < 1 used by the normalization-free identity.
std::vector<ProblemParams> kernel_panel() {
  return {ProblemParams::make(3, 0.5, 1.0, 4.0), ProblemParams::make(3, 0.5, 0.0, 6.0),
          ProblemParams::make(2, 0.5, 0.0, 5.0), ProblemParams::make(4, 0.25, 0.0, 3.0),
          ProblemParams::make(3, 0.75, 1.0, 8.0), ProblemParams::make(10, 0.5, 0.0, 2.0),
          ProblemParams::make(10, 0.5, 0.0, 6.0)};
}

SuiteReport verify_kernels(const VerifyOptions& opt) {
  Recorder R("kernels", opt);
  R.guard("K_α symmetry", [&] {
    double worst = 0.0;
    for (double alpha : {0.2, 0.6})
      for (double c : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
        const double k1 = kernel_K({alpha, 3, 0.5}, c), k2 = kernel_K({2.0 - alpha, 3, 0.5}, c);
        worst = std::max(worst, rel(k1, k2));
      }
    R.below("K_α = K_{(n−2s)−α} at (3,0.5)", worst, 1e-8);
  });
  R.guard("K_α decreasing", [&] {
    int bad = 0;
    for (double c : {-0.5, 0.0, 0.5}) {
      double prev = INFINITY;
      for (int k = 0; k <= 10; ++k) {
        const double v = kernel_K({0.1 * k, 3, 0.5}, c);
        if (!(v < prev)) ++bad;
        prev = v;
      }
    }
    R.none("K_α strictly decreasing for α ≤ (n−2s)/2", bad, "α = 0..1, c ∈ {−0.5, 0, 0.5}");
  });
  R.guard("K_1(0)", [&] { R.near("K_1(c=0)=1/2 at (3,0.5)", kernel_K({1.0, 3, 0.5}, 0.0), 0.5, 1e-12); });
  R.guard("normalization-free identity", [&] {
    const auto panel = kernel_panel();
    double worst = 0.0;
    int bad = 0;
    KernelQuadrature q;
    q.exec = opt.exec;
    for (const auto& P : panel) {
      const double A = a_constant(P, q);
      const double H = hardy_integral(P.n, P.s, q);
      const double lam = lambda_alpha(P, P.alpha());
      worst = std::max(worst, rel(A / H, lam / hardy_gamma(P.n, P.s)));
      if ((P.p * A > H) != (stability_margin(P) > 0.0)) ++bad;
    }
    R.below("normalization-free ratio identity A/H = λ(α)/Λ", worst, 1e-4,
            std::to_string(panel.size()) + " supercritical tuples");
    R.none("p·A > H ⇔ margin > 0", bad);
  });
  return R.finish();
}

SuiteReport verify_extension(const VerifyOptions& opt) {
  Recorder R("extension", opt);
  ExtendOptions eo;
  eo.exec = opt.exec;
  const auto poisson = RadialProfile::analytic([](double x) { return 1.0 / (1.0 + x * x); }, 1.0, TailModel::power_law(1.0, 2.0));
  R.guard("Poisson normalization", [&] {
    double worst = 0.0;
    for (auto [n, s] : {std::pair{1, 0.5}, {1, 0.25}, {3, 0.75}, {2, 0.3}})
      worst = std::max(worst, rel(poisson_normalization(n, s), poisson_constant_closed_form(n, s)));
    R.below("Poisson normalization = closed form", worst, 1e-10);
  });
  R.guard("Poisson extension", [&] {
    const auto g = HalfSpaceGrid::make(5.0, 21, 1e-3, 2.0, 12, 0.0);
    const auto f = extend_radial(poisson, g, 1, 0.5, eo);
    double err = 0.0;
    for (std::size_t j = 0; j < g.ny(); ++j)
      for (std::size_t i = 0; i < g.nr(); ++i) {
        const double r = g.r[i], y = g.y[j];
        err = std::max(err, std::abs(f.at(i, j) - (1 + y) / (r * r + (1 + y) * (1 + y))));
      }
    R.below("extension of 1/(1+x²) = (1+y)/(x²+(1+y)²)", err, 1e-4, "n=1, s=0.5, 21x12 grid");
    const auto tr = neumann_trace(f);
    double te = 0.0;
    for (std::size_t i = 0; i < tr.r.size(); ++i) {
      const double x = tr.r[i];
      te = std::max(te, std::abs(tr.values[i] - (1 - x * x) / std::pow(1 + x * x, 2)));
    }
    R.below("Neumann trace = (1−x²)/(1+x²)²", te, 1e-3, "|x| ≤ 5");
    const auto ref = frac_laplacian_oracle(poisson, 1, 0.5, tr.r);
    double m = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < tr.r.size(); ++i) {
      m = std::max(m, std::abs(tr.values[i] - kappa_s(0.5) * ref.values[i]));
      sup = std::max(sup, std::abs(kappa_s(0.5) * ref.values[i]));
    }
    R.below("trace identity (Poisson profile, s=0.5)", m / sup, 1e-2, "sup-norm relative");
  });
  R.guard("degenerate residual order", [&] {
    auto g = HalfSpaceGrid::make(5.0, 21, 0.05, 2.0, 13, 0.0);
    double prev = 0.0, worst = INFINITY;
    for (int k = 0; k < 4; ++k) {
      const double res = degenerate_residual(extend_radial(poisson, g, 1, 0.5, eo));
      if (k > 0) worst = std::min(worst, std::log2(prev / res));
      prev = res;
      g = g.refined();
    }
    R.flag("degenerate residual order ≥ 1.8", worst >= 1.8, worst, 1.8, "three dyadic refinements from 21x13");
  });
  const auto gauss = RadialProfile::analytic([](double x) { return std::exp(-x * x); });
  for (double s : {0.25, 0.75}) {
    R.guard("trace identity", [&] {
      HalfSpaceGrid g;
      for (int i = 0; i <= 20; ++i) g.r.push_back(0.25 * i);
      for (int j = 0; j < 8; ++j) g.y.push_back(1e-3 * std::pow(2.0, j));
      g.weight_exponent = 1.0 - 2.0 * s;
      const auto f = extend_radial(gauss, g, 1, s, eo);
      const auto tr = neumann_trace(f);
      const auto ref = frac_laplacian_oracle(gauss, 1, s, g.r);
      double m = 0.0, sup = 0.0;
      for (std::size_t i = 0; i < g.r.size(); ++i) {
        m = std::max(m, std::abs(tr.values[i] - kappa_s(s) * ref.values[i]));
        sup = std::max(sup, std::abs(kappa_s(s) * ref.values[i]));
      }
      R.below("trace identity (Gaussian, s=" + io::fmt(s) + ")", m / sup, 1e-2, "sup-norm relative, n=1");
    });
  }
  return R.finish();
}

namespace {

double homogeneous_profile(double r, double y, double gamma) {
  const double rho = std::hypot(r, y);
  const double t = y / rho;
  return std::pow(rho, -gamma) * (1.0 + 0.5 * t * t + 0.2 * t);
}

double bump(double r, double y) {
  const double q = (r * r + y * y) / 9.0;
  if (q >= 1.0) return 0.0;
  return (1.0 + 0.5 * y * y + 0.3 * r * r) * std::exp(1.0 - 1.0 / (1.0 - q));
}

}  // namespace

SuiteReport verify_energy(const VerifyOptions& opt) {
  Recorder R("energy", opt);
  EnergyOptions eo;
  eo.exec = opt.exec;
  const auto grid = HalfSpaceGrid::make(5.0, 11, 1e-3, 5.0, 11, 0.0);

  R.guard("homogeneous field", [&] {
    const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
    const double g = P.beta();
    const auto f = HalfSpaceField::from_function(grid, P, [g](double r, double y) { return homogeneous_profile(r, y, g); });
    const std::vector<double> lams{1.0, 1.5, 2.0, 3.0, 4.0};
    const auto curve = energy_curve(f, lams, eo);
    double drift = 0.0, dmax = 0.0;
    for (std::size_t k = 0; k < lams.size(); ++k) {
      drift = std::max(drift, rel(curve.values[k], curve.values[0]));
      dmax = std::max(dmax, std::abs(energy_derivative_first_order(f, lams[k], eo)));
    }
    R.below("E(λ) constant on a homogeneous field", drift, 1e-4, "λ ∈ [1,4], (3,0.5,1,4)");
    R.below("dE/dλ = 0 on a homogeneous field", dmax, 1e-10);
  });

  const auto P2 = ProblemParams::make(2, 0.5, 0.0, 3.0);
  const auto bubble = HalfSpaceField::from_function(grid, P2, [](double r, double y) {
    return 1.0 / std::sqrt(r * r + (1 + y) * (1 + y));
  });
  R.guard("bubble", [&] {
    R.near("bubble E(1)=π/8", energy_first_order(bubble, 1.0, eo), M_PI / 8.0, 1e-8);
    R.near("bubble E(2)=2π/15", energy_first_order(bubble, 2.0, eo), 2.0 * M_PI / 15.0, 1e-8);
    const double lam = 1.3, h = 1e-3;
    double mismatch[2];
    for (int v = 0; v < 2; ++v) {
      EnergyOptions o = eo;
      o.sphere = v == 0 ? SphereCoefficient::PMinusOne : SphereCoefficient::PPlusOne;
      const double fd = (energy_first_order(bubble, lam + h, o) - energy_first_order(bubble, lam - h, o)) / (2 * h);
      mismatch[v] = rel(fd, energy_derivative_first_order(bubble, lam, o));
    }
    R.below("dE/dλ formula = finite difference of E", mismatch[0], 0.05, "bubble, (s+a/2)/(p−1) coefficient");
    R.flag("(s+a/2)/(p+1) coefficient breaks the dE/dλ identity", mismatch[1] > 0.05, mismatch[1], 0.05,
           "relative mismatch must exceed 5%");
  });
  R.guard("scale invariance (first order)", [&] {
    double worst = 0.0;
    for (double l : {1.0, 1.5})
      for (double m : {0.7, 1.3})
        worst = std::max(worst, rel(energy_first_order(rescale(bubble, m), l, eo), energy_first_order(bubble, l * m, eo)));
    R.below("E(u, λμ) = E(u^μ, λ), first order", worst, 1e-6);
  });
  R.guard("Gaussian extension", [&] {
    ExtendOptions xo;
    xo.exec = opt.exec;
    const auto gauss = RadialProfile::analytic([](double x) { return std::exp(-x * x); });
    const auto g = HalfSpaceGrid::make(4.0, 41, 1e-3, 4.0, 41, 0.0);
    auto f = extend_radial(gauss, g, 1, 0.5, xo);
    f.params = ProblemParams::make(1, 0.5, 0.0, 3.0);
    double dmin = INFINITY;
    for (double l : {0.5, 1.0, 2.0}) dmin = std::min(dmin, energy_derivative_first_order(f, l, eo));
    R.flag("dE/dλ > 0 on the Gaussian extension", dmin > 0.0, dmin, 0.0, "λ ∈ {0.5, 1, 2}, sampled 41x41 field");
  });
  R.guard("higher order", [&] {
    const auto H = ProblemParams::make(10, 1.5, 1.0, 3.0);
    const auto f = HalfSpaceField::from_function(grid, H, bump);
    HigherOrderOptions ho;
    ho.exec = opt.exec;
    double worst = 0.0;
    for (double l : {1.0, 1.5})
      for (double m : {0.7, 1.3})
        worst = std::max(worst, rel(energy_higher_order(rescale(f, m), l, 0.0, ho), energy_higher_order(f, l * m, 0.0, ho)));
    R.below("E(u, λμ) = E(u^μ, λ), higher order", worst, 1e-4, "(10,1.5,1,3) bump field");
  });
  R.guard("delta_b", [&] {
    const auto P = ProblemParams::make(3, 1.35, 0.0, 3.0);
    const auto g = HalfSpaceGrid::make(2.0, 9, 0.1, 2.0, 9, P.b());
    double e = 0.0;
    for (double v : delta_b(HalfSpaceField::from_function(g, P, [](double, double y) { return y * y; }, false)).values)
      e = std::max(e, std::abs(v - (2.0 + 2.0 * P.b())));
    R.below("Δ_b y² = 2+2b", e, 1e-10);
    e = 0.0;
    for (double v : delta_b(HalfSpaceField::from_function(g, P, [](double r, double) { return r * r; }, false)).values)
      e = std::max(e, std::abs(v - 2.0 * P.n));
    R.below("Δ_b r² = 2n", e, 1e-10);
    // Degree k → k−2: Δ_b on the grid scaled by λ equals λ^{k−2} times Δ_b on the original grid.
    const double k = 2.5, lam = 1.7;
    auto w = [k](double r, double y) { return std::pow(r * r + y * y, 0.5 * k) * (1.0 + y / std::hypot(r, y)); };
    HalfSpaceGrid gl = g;
    for (double& r : gl.r) r *= lam;
    for (double& y : gl.y) y *= lam;
    const auto d1 = delta_b(HalfSpaceField::from_function(g, P, w, false));
    const auto d2 = delta_b(HalfSpaceField::from_function(gl, P, w, false));
    e = 0.0;
    for (std::size_t i = 0; i < d1.values.size(); ++i)
      e = std::max(e, rel(d2.values[i], std::pow(lam, k - 2.0) * d1.values[i]));
    R.below("Δ_b maps degree k to degree k−2", e, 1e-10, "k=2.5, λ=1.7");
  });
  R.guard("dimension conditions", [&] {
    const auto d = dimension_conditions(ProblemParams::make(10, 1.5, 1.0, 3.0));
    R.near("(10,1.5,1,3) first condition margin", d.first_margin(), 10.0 - (10.0 / 6.0 + 2.0), 1e-12);
    R.flag("(10,1.5,1,3) second condition 10 > 7", d.second_holds && std::abs(d.second_rhs - 7.0) < 1e-12, d.second_rhs, 7.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
      const int n = 1 + static_cast<int>(30 * u01(rng));
      const double s = 1.0 + 1e-6 + (1.0 - 2e-6) * u01(rng);
      const auto dd = dimension_conditions(ProblemParams::make(n, s, 5.0 * u01(rng), 1.0 + 1e-3 + 50.0 * u01(rng)));
      if (!dd.implication_consistent) ++bad;
    }
    R.none("second condition ⇒ first condition", bad, "10^4 random tuples with 1 < s < 2");
  });
  return R.finish();
}

SuiteReport verify_estimates(const VerifyOptions& opt) {
  Recorder R("estimates", opt);
  R.guard("ρ_R scaling", [&] {
    CutoffSpec c1;
    c1.m = 1.0;
    c1.R = 7.5;
    CutoffSpec c3;
    c3.m = 2.0;
    c3.R = 4.0;
    const double d = std::max(rho_r_scaling_check(c1, 1, 0.25, {0, 1, 5, 20, 80}, opt.exec).max_ratio,
                              rho_r_scaling_check(c3, 3, 0.5, {0, 1, 5, 20}, opt.exec).max_ratio);
    R.below("ρ_R = R^{−2s} ρ(·/R) with φ ≡ 1", d, 1e-6);
  });
  R.guard("ρ closed form", [&] {
    CutoffSpec c;
    c.m = 2.0;
    double worst = 0.0;
    for (double x : {0.0, 1.0, 3.0}) worst = std::max(worst, rel(rho_eval(c, x, 3, 0.5), M_PI * M_PI / std::pow(1 + x * x, 2)));
    R.below("ρ = π²(1+|x|²)^{−2} at (n=3, s=0.5, m=2)", worst, 1e-8);
  });
  R.guard("ρ ratio", [&] {
    CutoffSpec c;
    c.m = 1.0;
    std::vector<double> xs;
    for (int i = 0; i <= 40; ++i) xs.push_back(2.5 * i);
    const auto rep = rho_ratio_check(c, 1, 0.25, xs, opt.exec);
    R.flag("ρ(x)(1+|x|²)^{n/2+s} ratio c₂/c₁ < 50", rep.max_ratio < 50.0, rep.max_ratio, 50.0, "|x| ≤ 100, (1,0.25,1)");
  });
  R.guard("ρ_R bound", [&] {
    CutoffSpec c;
    c.m = 1.0;
    c.R = 10.0;
    c.phi = PhiModel::SmoothBump;
    const auto rep = rho_r_bound_check(c, 1, 0.25, {0, 1, 5, 10, 15, 20, 30, 100}, opt.exec);
    R.flag("ρ_R ≤ C(η(x/R)²|x|^{−n−2s} + R^{−2s}ρ(x/R)) with finite C", std::isfinite(rep.max_ratio) && rep.max_ratio > 0,
           rep.max_ratio, 0.0, "measured C, smooth bump on [R, 2R]");
  });
  R.guard("singular scaling", [&] {
    const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
    const auto rep = singular_scaling_check(P, {1, 2, 4, 8});
    R.near("singular power integral slope (3,0.5,1,4)", rep.slope_measured, 2.0 / 3.0, 1e-6);
    R.near("doubling R multiplies by 2^e", singular_power_integral(P, 2.0) / singular_power_integral(P, 1.0),
           std::pow(2.0, 2.0 / 3.0), 1e-12);
    const double g = P.beta();
    const auto w = weighted_trace_scaling_check(P, {1, 2, 4, 8}, [g](double r, double y) { return homogeneous_profile(r, y, g); });
    R.near("weighted trace slope n+2−(2s(p+1)+2a)/(p−1)", w.slope_measured, 8.0 / 3.0, 1e-6);
    const auto H = ProblemParams::make(10, 1.5, 1.0, 3.0);
    const double gh = H.beta();
    const auto wh = weighted_trace_scaling_check(H, {1, 2, 4, 8}, [gh](double r, double y) { return homogeneous_profile(r, y, gh); });
    R.near("weighted trace slope n+4−(2s(p+1)+2a)/(p−1), 1<s<2", wh.slope_measured, 7.0, 1e-6);
  });
  R.guard("finalu2", [&] {
    const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
    CutoffSpec c;
    c.m = 2.0;
    c.phi = PhiModel::SmoothBump;
    const auto rep = finalu2_scaling_check(P, c, {10, 100, 1000, 10000}, opt.exec);
    R.flag("∫u_s²ρ_R grows no faster than R^e", rep.slope_measured <= rep.slope_expected + 0.05 * opt.tolerance_scale,
           rep.slope_measured, rep.slope_expected, "R ∈ [10, 10^4], smooth bump");
    R.near("∫u_s²ρ_R slope matches e", rep.slope_measured, rep.slope_expected, 5e-2);
  });
  return R.finish();
}

std::vector<SuiteReport> run_suite(Suite suite, const VerifyOptions& opt) {
  switch (suite) {
    case Suite::Constants: return {verify_constants(opt)};
    case Suite::Kernels: return {verify_kernels(opt)};
    case Suite::Extension: return {verify_extension(opt)};
    case Suite::Energy: return {verify_energy(opt)};
    case Suite::Estimates: return {verify_estimates(opt)};
    case Suite::All:
      return {verify_constants(opt), verify_kernels(opt), verify_extension(opt), verify_energy(opt),
              verify_estimates(opt)};
  }
  return {};
}

namespace {
std::string short_fmt(double v) {
  if (!std::isfinite(v)) return io::fmt(v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace

std::string format_report(const SuiteReport& r) {
  std::ostringstream o;
  for (const auto& c : r.checks) {
    o << c.name << ' ' << (c.passed ? "PASS" : "FAIL") << " (measured=" << short_fmt(c.measured)
      << ", expected=" << short_fmt(c.expected);
    if (c.tolerance > 0.0) o << ", tol=" << short_fmt(c.tolerance);
    o << ')';
    if (!c.note.empty()) o << " [" << c.note << ']';
    o << '\n';
  }
  std::size_t ok = 0;
  for (const auto& c : r.checks) ok += c.passed;
  o << "suite " << r.suite << ": " << ok << '/' << r.checks.size() << " passed\n";
  return o.str();
}

}  // namespace fhle
