#include <doctest.h>

#include <cmath>

#include "fhle/error.hpp"
#include "fhle/estimates.hpp"

using namespace fhle;

namespace {
CutoffSpec cutoff(double m, double R = 1.0, PhiModel phi = PhiModel::One) {
  CutoffSpec c;
  c.m = m;
  c.R = R;
  c.phi = phi;
  return c;
}
}  // namespace

TEST_CASE("rho_eval against mpmath") {
  const auto c = cutoff(1.0);
  CHECK(rho_eval(c, 0.0, 1, 0.25) == doctest::Approx(2.334821740193466).epsilon(1e-9));
  CHECK(rho_eval(c, 1.0, 1, 0.25) == doctest::Approx(1.126757449462011).epsilon(1e-9));
  CHECK(rho_eval(c, 10.0, 1, 0.25) == doctest::Approx(0.07269667809766903).epsilon(1e-9));
  CHECK(rho_eval(c, 100.0, 1, 0.25) == doctest::Approx(0.002969351700093981).epsilon(1e-9));
  CHECK(rho_eval(cutoff(1.5), 1.0, 2, 0.75) == doctest::Approx(1.6240976947).epsilon(1e-9));
  CHECK(rho_eval(cutoff(2.0), 1.0, 3, 0.5) == doctest::Approx(M_PI * M_PI / 4).epsilon(1e-9));
  CHECK(rho_eval(cutoff(2.0), 3.0, 3, 0.5) == doctest::Approx(M_PI * M_PI / 100).epsilon(1e-9));
}

TEST_CASE("rho_eval stable under tighter quadrature") {
  RhoOptions tight;
  tight.rel_tol = 1e-13;
  const auto c = cutoff(1.0);
  CHECK(rho_eval(c, 0.0, 1, 0.25, tight) == doctest::Approx(rho_eval(c, 0.0, 1, 0.25)).epsilon(1e-9));
}

TEST_CASE("rho_r_eval") {
  const auto c = cutoff(1.0);
  for (double x : {0.0, 0.5, 3.0}) CHECK(rho_r_eval(c, x, 1, 0.25) == doctest::Approx(rho_eval(c, x, 1, 0.25)).epsilon(1e-12));
  const auto cR = cutoff(1.0, 7.5);
  for (double x : {0.0, 2.0, 30.0})
    CHECK(rho_r_eval(cR, x, 1, 0.25) ==
          doctest::Approx(std::pow(7.5, -0.5) * rho_eval(c, x / 7.5, 1, 0.25)).epsilon(1e-10));
  const auto bump = cutoff(1.0, 10.0, PhiModel::SmoothBump);
  CHECK(bump.phi_value(5.0) == 1.0);
  CHECK(bump.phi_value(25.0) == 0.0);
  CHECK(bump.phi_value(15.0) > 0.0);
  CHECK(bump.phi_value(15.0) < 1.0);
  CHECK(rho_r_eval(bump, 15.0, 1, 0.25) > 0.0);
}

TEST_CASE("cutoff validation") {
  CHECK_THROWS_AS(rho_eval(cutoff(0.4), 0.0, 1, 0.25), Error);
  CHECK_THROWS_AS(rho_eval(cutoff(1.0), 0.0, 1, 1.25), Error);
  CHECK_THROWS_AS(rho_r_eval(cutoff(1.0, 0.5), 0.0, 1, 0.25), Error);
  CHECK_THROWS_AS(rho_eval(cutoff(1.0), NAN, 1, 0.25), Error);
  // radial: only |x| matters
  CHECK(rho_eval(cutoff(1.0), -1.0, 1, 0.25) == rho_eval(cutoff(1.0), 1.0, 1, 0.25));
}

TEST_CASE("rho two-sided bound and rho_R checks") {
  std::vector<double> xs;
  for (int i = 0; i <= 40; ++i) xs.push_back(2.5 * i);
  const auto r = rho_ratio_check(cutoff(1.0), 1, 0.25, xs);
  CHECK(r.max_ratio == doctest::Approx(1.684).epsilon(1e-3));
  CHECK(r.max_ratio < 50.0);
  CHECK(rho_r_scaling_check(cutoff(1.0, 7.5), 1, 0.25, {0, 1, 5, 20}).max_ratio < 1e-6);
  const auto b = rho_r_bound_check(cutoff(1.0, 10.0, PhiModel::SmoothBump), 1, 0.25, {0, 1, 5, 10, 15, 20, 30, 100});
  CHECK(std::isfinite(b.max_ratio));
  CHECK(b.max_ratio == doctest::Approx(1.82).epsilon(1e-2));
}

TEST_CASE("singular scaling") {
  const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
  const auto r = singular_scaling_check(P, {1, 2, 4, 8});
  CHECK(r.slope_expected == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(r.slope_measured == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(singular_power_integral(P, 2.0) / singular_power_integral(P, 1.0) ==
        doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-13));
  CHECK(loglog_slope({1, 10, 100}, {3, 30, 300}) == doctest::Approx(1.0).epsilon(1e-14));
  // n = (2s(p+1)+2a)/(p−1): 3 = (5+2a)/3 at a = 2
  try {
    singular_power_integral(ProblemParams::make(3, 0.5, 2.0, 4.0), 1.0);
    FAIL("expected ExponentZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExponentZero);
  }
}

TEST_CASE("weighted trace scaling") {
  const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
  const double g = P.beta();
  auto model = [g](double r, double y) {
    const double rho = std::hypot(r, y), t = y / rho;
    return std::pow(rho, -g) * (1.0 + 0.5 * t * t + 0.2 * t);
  };
  CHECK(weighted_trace_scaling_check(P, {1, 2, 4, 8}, model).slope_measured == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
  const auto H = ProblemParams::make(10, 1.5, 1.0, 3.0);
  const double gh = H.beta();
  auto mh = [gh](double r, double y) { return std::pow(std::hypot(r, y), -gh); };
  CHECK(weighted_trace_scaling_check(H, {1, 2, 4, 8}, mh).slope_measured == doctest::Approx(7.0).epsilon(1e-9));
  CHECK_THROWS_AS(weighted_trace_scaling_check(P, {1, 2}, [](double r, double y) { return std::exp(-r - y); }), Error);
}

TEST_CASE("finalu2 scaling") {
  const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
  for (auto phi : {PhiModel::One, PhiModel::SmoothBump}) {
    const auto r = finalu2_scaling_check(P, cutoff(2.0, 1.0, phi), {10, 100, 1000, 10000});
    CHECK(r.slope_measured == doctest::Approx(r.slope_expected).epsilon(5e-2));
  }
}
