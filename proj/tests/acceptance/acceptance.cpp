// Acceptance runner: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Usage: fhle_acceptance <path to fhle binary>
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fhle/estimates.hpp"
#include "fhle/exponents.hpp"
#include "fhle/extension.hpp"
#include "fhle/fraclap.hpp"
#include "fhle/kernels.hpp"
#include "fhle/monotonicity.hpp"
#include "fhle/parallel.hpp"
#include "fhle/specfun.hpp"

using namespace fhle;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [failed]");
  }
};

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

int failures = 0;

void criterion(int id, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) o.require(t < budget_s, "runtime " + sci(t) + " s < " + sci(budget_s) + " s");
  if (!o.pass) ++failures;
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail.str() << ")" << std::endl;
}

const HalfSpaceGrid kGrid = HalfSpaceGrid::make(5.0, 11, 1e-3, 5.0, 11, 0.0);

double homogeneous_value(double r, double y, double g) {
  const double rho = std::hypot(r, y), t = y / rho;
  return std::pow(rho, -g) * (1.0 + 0.5 * t * t + 0.2 * t);
}

int shell(const std::string& cmd) {
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  const std::string fhle = argc > 1 ? argv[1] : "fhle";

  criterion(1, 1.0, [](Outcome& o) {
    o.require(std::abs(kappa_s(0.5) - 1.0) <= 1e-12, "κ_0.5=1");
    double w = 0;
    for (int k = 1; k <= 9; ++k) w = std::max(w, std::abs(kappa_s(0.1 * k) * kappa_s(1 - 0.1 * k) - 1));
    o.require(w <= 1e-12, "max|κ_sκ_{1−s}−1|=" + sci(w));
    w = 0;
    for (auto [n, s] : {std::pair{2, 0.5}, {3, 0.5}, {3, 0.75}, {5, 0.25}, {10, 0.5}})
      w = std::max(w, rel(lambda_alpha(n, s, 0.0), hardy_gamma(n, s)));
    o.require(w <= 1e-12, "max rel |λ(0)−Λ|=" + sci(w));
  });

  criterion(2, 0, [](Outcome& o) {
    const double a = std::abs(lambda_alpha(3, 0.5, 1.0 / 3.0) - 1 / std::sqrt(3.0));
    const double b = std::abs(hardy_gamma(3, 0.5) - 2 / M_PI);
    o.require(a <= 1e-12, "|λ(1/3)−3^{−1/2}|=" + sci(a));
    o.require(b <= 1e-12, "|Λ_{3,0.5}−2/π|=" + sci(b));
  });

  criterion(3, 1.0, [](Outcome& o) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0;
    int tuples = 0, flips = 0;
    while (tuples < 100) {
      const int n = 1 + static_cast<int>(12 * u(rng));
      const double s = 0.05 + 0.9 * u(rng);
      if (!(n > 2 * s)) continue;
      const double a = 3 * u(rng);
      const double pS = sobolev_exponent(n, s, a);
      const auto P = ProblemParams::make(n, s, a, pS * (1 + std::exp(std::log(1e-3) + u(rng) * std::log(1e5))));
      const double m = stability_margin(P);
      worst = std::max(worst, rel(m, stability_margin_via_lambda(P)));
      if ((classify(P).verdict == Verdict::SupercriticalTheoremApplies) != (m > 0)) ++flips;
      ++tuples;
    }
    o.require(worst <= 1e-10, "100 tuples, max rel diff " + sci(worst));
    o.require(flips == 0, "verdict/margin-sign mismatches " + std::to_string(flips));
  });

  criterion(4, 5.0, [](Outcome& o) {
    o.require(!jl_threshold(3, 0.5, 0.0, 1e6), "no root at (3,0.5,0)");
    o.require(!jl_threshold(3, 0.5, 1.0, 1e6), "no root at (3,0.5,1)");
    const auto r = jl_threshold(10, 0.5, 0.0, 1e6);
    o.require(r.has_value(), "root at (10,0.5,0)");
    if (r) {
      const double m = stability_margin(ProblemParams::make(10, 0.5, 0.0, r->root));
      o.require(std::abs(m) <= 1e-8, "p_c=" + std::to_string(r->root) + ", margin(p_c)=" + sci(m));
    }
  });

  criterion(5, 10.0, [](Outcome& o) {
    double w = 0;
    for (double al : {0.1, 0.3, 0.7})
      for (double c : {-0.9, -0.5, 0.0, 0.5, 0.9}) w = std::max(w, rel(kernel_K({al, 3, 0.5}, c), kernel_K({2 - al, 3, 0.5}, c)));
    o.require(w <= 1e-8, "symmetry max rel " + sci(w));
    int bad = 0;
    for (double c : {-0.5, 0.0, 0.5}) {
      double prev = INFINITY;
      for (int k = 0; k < 10; ++k) {
        const double v = kernel_K({0.1 * k, 3, 0.5}, c);
        bad += !(v < prev);
        prev = v;
      }
    }
    o.require(bad == 0, "strictly decreasing on α < 1");
    const double k1 = kernel_K({1.0, 3, 0.5}, 0.0);
    o.require(std::abs(k1 - 0.5) <= 1e-12, "K_1(0)=" + std::to_string(k1));
  });

  criterion(6, 60.0, [](Outcome& o) {
    const ProblemParams panel[] = {ProblemParams::make(3, 0.5, 1.0, 4.0), ProblemParams::make(3, 0.5, 0.0, 6.0),
                                   ProblemParams::make(2, 0.5, 0.0, 5.0), ProblemParams::make(4, 0.25, 0.0, 3.0),
                                   ProblemParams::make(3, 0.75, 1.0, 8.0), ProblemParams::make(10, 0.5, 0.0, 2.0),
                                   ProblemParams::make(10, 0.5, 0.0, 6.0)};
    double w = 0;
    int mismatch = 0, silent = 0;
    for (const auto& P : panel) {
      const double A = a_constant(P), H = hardy_integral(P.n, P.s);
      w = std::max(w, rel(A / H, lambda_alpha(P, P.alpha()) / hardy_gamma(P.n, P.s)));
      const double m = stability_margin(P);
      silent += m < 0;
      mismatch += (P.p * A > H) != (m > 0);
    }
    o.require(w <= 1e-4, "7 tuples, max rel " + sci(w));
    o.require(mismatch == 0, "p·A>H ⇔ margin>0 (" + std::to_string(silent) + " tuples with margin<0)");
  });

  criterion(7, 60.0, [](Outcome& o) {
    const auto u = RadialProfile::analytic([](double x) { return 1 / (1 + x * x); }, 1.0, TailModel::power_law(1, 2));
    const auto g = HalfSpaceGrid::make(5.0, 21, 1e-3, 2.0, 12, 0.0);
    const auto f = extend_radial(u, g, 1, 0.5);
    double e = 0;
    for (std::size_t j = 0; j < g.ny(); ++j)
      for (std::size_t i = 0; i < g.nr(); ++i) {
        const double r = g.r[i], y = g.y[j];
        e = std::max(e, std::abs(f.at(i, j) - (1 + y) / (r * r + (1 + y) * (1 + y))));
      }
    o.require(e <= 1e-4, "field err " + sci(e));
    const auto tr = neumann_trace(f);
    double t = 0;
    for (std::size_t i = 0; i < tr.r.size(); ++i)
      t = std::max(t, std::abs(tr.values[i] - (1 - tr.r[i] * tr.r[i]) / std::pow(1 + tr.r[i] * tr.r[i], 2)));
    o.require(t <= 1e-3, "trace err " + sci(t));
    auto gr = HalfSpaceGrid::make(5.0, 21, 0.05, 2.0, 13, 0.0);
    double prev = 0, order = INFINITY;
    for (int k = 0; k < 4; ++k) {
      const double res = degenerate_residual(extend_radial(u, gr, 1, 0.5));
      if (k) order = std::min(order, std::log2(prev / res));
      prev = res;
      gr = gr.refined();
    }
    o.require(order >= 1.8, "residual order " + sci(order));
  });

  criterion(8, 120.0, [](Outcome& o) {
    const auto u = RadialProfile::analytic([](double x) { return std::exp(-x * x); });
    for (double s : {0.25, 0.75}) {
      HalfSpaceGrid g;
      for (int i = 0; i <= 20; ++i) g.r.push_back(0.25 * i);
      for (int j = 0; j < 8; ++j) g.y.push_back(1e-3 * std::pow(2.0, j));
      g.weight_exponent = 1 - 2 * s;
      const auto tr = neumann_trace(extend_radial(u, g, 1, s));
      const auto ref = frac_laplacian_oracle(u, 1, s, g.r);
      double e = 0, sup = 0;
      for (std::size_t i = 0; i < g.r.size(); ++i) {
        e = std::max(e, std::abs(tr.values[i] - kappa_s(s) * ref.values[i]));
        sup = std::max(sup, std::abs(kappa_s(s) * ref.values[i]));
      }
      o.require(e / sup <= 1e-2, "s=" + sci(s) + " rel " + sci(e / sup));
    }
  });

  criterion(9, 60.0, [](Outcome& o) {
    const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
    const double gam = P.beta();
    const auto hom = HalfSpaceField::from_function(kGrid, P, [gam](double r, double y) { return homogeneous_value(r, y, gam); });
    const auto curve = energy_curve(hom, {1.0, 2.0, 3.0, 4.0});
    double drift = 0, dmax = 0;
    for (double v : curve.values) drift = std::max(drift, rel(v, curve.values[0]));
    for (double l : {1.0, 2.0, 4.0}) dmax = std::max(dmax, std::abs(energy_derivative_first_order(hom, l)));
    o.require(drift <= 1e-4, "homogeneous drift " + sci(drift));
    o.require(dmax <= 1e-10, "homogeneous |dE/dλ| " + sci(dmax));

    const auto bubble = HalfSpaceField::from_function(kGrid, ProblemParams::make(2, 0.5, 0.0, 3.0),
                                                      [](double r, double y) { return 1 / std::hypot(r, 1 + y); });
    double dmin = INFINITY;
    for (double l : {0.5, 1.3, 2.0}) dmin = std::min(dmin, energy_derivative_first_order(bubble, l));
    o.require(dmin >= 0, "dE/dλ ≥ 0 (min " + sci(dmin) + ")");

    double inv = 0;
    for (double m : {0.7, 1.3}) inv = std::max(inv, rel(energy_first_order(rescale(bubble, m), 1.3), energy_first_order(bubble, 1.3 * m)));
    o.require(inv <= 1e-4, "first-order scale invariance " + sci(inv));
    const auto H = ProblemParams::make(10, 1.5, 1.0, 3.0);
    const auto bump = HalfSpaceField::from_function(kGrid, H, [](double r, double y) {
      const double q = (r * r + y * y) / 9;
      return q >= 1 ? 0.0 : (1 + 0.5 * y * y + 0.3 * r * r) * std::exp(1 - 1 / (1 - q));
    });
    double hi = 0;
    for (double m : {0.7, 1.3}) hi = std::max(hi, rel(energy_higher_order(rescale(bump, m), 1.1), energy_higher_order(bump, 1.1 * m)));
    o.require(hi <= 1e-4, "higher-order scale invariance " + sci(hi));

    // Regression: with (s+a/2)/(p+1) the energy no longer differentiates to the displayed dE/dλ.
    EnergyOptions pp;
    pp.sphere = SphereCoefficient::PPlusOne;
    const double h = 1e-3;
    const double fd = (energy_first_order(bubble, 1.3 + h, pp) - energy_first_order(bubble, 1.3 - h, pp)) / (2 * h);
    const double mism = rel(fd, energy_derivative_first_order(bubble, 1.3, pp));
    o.require(mism > 0.05, "(p+1) variant breaks dE/dλ on the bubble, mismatch " + sci(mism));
    // Reported, not gated: on a homogeneous field each term of E is separately
    // λ-invariant, so no coefficient choice can break constancy there.
    const auto cp = energy_curve(hom, {1.0, 4.0}, pp);
    std::cout << "criterion 9 note: (p+1) variant on the homogeneous field drifts by " << sci(rel(cp.values[1], cp.values[0]))
              << " over [1,4]; a constancy failure there is unattainable" << std::endl;
  });

  criterion(10, 60.0, [](Outcome& o) {
    CutoffSpec c1;
    c1.R = 7.5;
    const double sc = rho_r_scaling_check(c1, 1, 0.25, {0, 1, 5, 20, 80}).max_ratio;
    o.require(sc <= 1e-6, "ρ_R scaling " + sci(sc));
    std::vector<double> xs;
    for (int i = 0; i <= 40; ++i) xs.push_back(2.5 * i);
    const double ratio = rho_ratio_check(CutoffSpec{}, 1, 0.25, xs).max_ratio;
    o.require(ratio < 50, "c₂/c₁=" + sci(ratio));
    const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
    const double sl = singular_scaling_check(P, {1, 2, 4, 8}).slope_measured;
    o.require(std::abs(sl - 2.0 / 3.0) <= 1e-6, "singular slope " + std::to_string(sl));
    const double g = P.beta();
    const double wt = weighted_trace_scaling_check(P, {1, 2, 4, 8}, [g](double r, double y) { return homogeneous_value(r, y, g); }).slope_measured;
    o.require(std::abs(wt - 8.0 / 3.0) <= 1e-6, "weighted trace slope " + std::to_string(wt));
    CutoffSpec c2;
    c2.m = 2.0;
    c2.phi = PhiModel::SmoothBump;
    const auto q = finalu2_scaling_check(P, c2, {10, 100, 1000, 10000});
    o.require(std::abs(q.slope_measured - q.slope_expected) <= 5e-2, "quadrature slope " + std::to_string(q.slope_measured));
  });

  criterion(11, 0, [&](Outcome& o) {
    const fs::path dir = fs::temp_directory_path() / "fhle_acceptance";
    fs::create_directories(dir);
    auto run_to = [&](const std::string& args, const std::string& file) {
      return shell(fhle + " " + args + " > " + (dir / file).string() + " 2>/dev/null");
    };
    const std::string sweep = "sweep --axis p --lo 3.01 --hi 100 --count 64 --spacing geometric --n 3 --s 0.5 --a 1";
    const bool csv_ok = run_to(sweep, "a.csv") == 0 && run_to(sweep, "b.csv") == 0;
    o.require(csv_ok && slurp(dir / "a.csv") == slurp(dir / "b.csv") && !slurp(dir / "a.csv").empty(), "sweep CSV byte-identical");
    const std::string js = "classify --n 10 --s 0.5 --a 0 --p 5 --json";
    const bool js_ok = run_to(js, "a.json") == 0 && run_to(js, "b.json") == 0;
    o.require(js_ok && slurp(dir / "a.json") == slurp(dir / "b.json"), "classify JSON byte-identical");
    const std::string en = "energy --lambda 1,2,4";
    o.require(run_to(en, "a.e") == 0 && run_to(en, "b.e") == 0 && slurp(dir / "a.e") == slurp(dir / "b.e"),
              "energy CSV byte-identical");
    const int inv = run_to("classify --n 3 --s 1.0 --a 1 --p 2", "x");
    o.require(inv == 2, "invalid input exit " + std::to_string(inv));
    const int io = run_to("sweep --lo 3 --hi 5 --count 4 --output /nonexistent/dir/out.csv", "x");
    o.require(io == 3, "I/O failure exit " + std::to_string(io));
    const int vf = run_to("verify constants --tolerance-scale 1e-6", "x");
    o.require(vf == 1, "verification failure exit " + std::to_string(vf));
    const int ok = run_to("verify constants", "x");
    o.require(ok == 0, "success exit " + std::to_string(ok));
    fs::remove_all(dir);
  });

  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
