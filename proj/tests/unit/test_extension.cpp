#include <doctest.h>

#include <cmath>

#include "fhle/error.hpp"
#include "fhle/extension.hpp"
#include "fhle/fraclap.hpp"
#include "fhle/specfun.hpp"

using namespace fhle;

namespace {
RadialProfile poisson_profile() {
  return RadialProfile::analytic([](double x) { return 1.0 / (1.0 + x * x); }, 1.0, TailModel::power_law(1.0, 2.0));
}
RadialProfile gaussian() {
  return RadialProfile::analytic([](double x) { return std::exp(-x * x); });
}
}  // namespace

TEST_CASE("poisson_normalization") {
  CHECK(poisson_normalization(1, 0.5) == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
  CHECK(poisson_normalization(1, 0.25) == doctest::Approx(0.19068994087545329702).epsilon(1e-10));
  CHECK(poisson_normalization(3, 0.75) == doctest::Approx(0.1660437343620068205).epsilon(1e-10));
  CHECK(poisson_mass(1, 0.25, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(poisson_mass(1, 0.25, 7.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(poisson_normalization(1, 1.5), Error);
}

TEST_CASE("extend_radial closed forms") {
  CHECK(extend_point(poisson_profile(), 1, 0.5, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
  const auto one = RadialProfile::analytic([](double) { return 1.0; }, 1.0, TailModel::constant(1.0));
  for (double s : {0.25, 0.5, 0.75})
    for (auto [r, y] : {std::pair{0.0, 0.1}, {2.0, 1.0}, {5.0, 30.0}})
      CHECK(extend_point(one, 2, s, r, y) == doctest::Approx(1.0).epsilon(1e-9));
  const auto g = HalfSpaceGrid::make(5.0, 21, 1e-3, 2.0, 12, 0.0);
  const auto f = extend_radial(poisson_profile(), g, 1, 0.5);
  for (std::size_t j = 0; j < g.ny(); ++j)
    for (std::size_t i = 0; i < g.nr(); ++i) {
      const double r = g.r[i], y = g.y[j];
      CHECK(f.at(i, j) == doctest::Approx((1 + y) / (r * r + (1 + y) * (1 + y))).epsilon(1e-9));
    }
}

TEST_CASE("sampled profile without tail") {
  std::vector<double> r, u;
  for (int i = 0; i <= 20; ++i) {
    r.push_back(0.25 * i);
    u.push_back(1.0 / (1.0 + r.back() * r.back()));
  }
  const auto prof = RadialProfile::sampled(r, u);
  try {
    extend_point(prof, 1, 0.5, 0.0, 3.0);
    FAIL("expected TailUnspecified");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TailUnspecified);
  }
  const auto tailed = RadialProfile::sampled(r, u, TailModel::power_law(1.0, 2.0));
  CHECK(extend_point(tailed, 1, 0.5, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("degenerate_residual") {
  const auto P = ProblemParams::make(1, 0.5, 0.0, 3.0);
  const auto g = HalfSpaceGrid::make(5.0, 21, 0.05, 2.0, 13, 0.0);
  CHECK(degenerate_residual(HalfSpaceField::from_function(g, P, [](double, double) { return 2.0; })) == 0.0);
  for (double s : {0.25, 0.75}) {
    const auto Q = ProblemParams::make(2, s, 0.0, 3.0);
    const auto gs = HalfSpaceGrid::make(5.0, 11, 0.05, 2.0, 13, 1.0 - 2.0 * s);
    CHECK(degenerate_residual(HalfSpaceField::from_function(gs, Q, [s](double, double y) { return std::pow(y, 2 * s); })) <
          1e-12);
  }
  // second-order convergence on the harmonic Poisson field
  auto grid = g;
  std::vector<double> res;
  for (int k = 0; k < 3; ++k) {
    res.push_back(degenerate_residual(extend_radial(poisson_profile(), grid, 1, 0.5)));
    grid = grid.refined();
  }
  for (std::size_t k = 1; k < res.size(); ++k) {
    const double order = std::log2(res[k - 1] / res[k]);
    CHECK(order >= 1.8);
    CHECK(order <= 2.2);
  }
}

TEST_CASE("neumann_trace") {
  const auto g = HalfSpaceGrid::make(5.0, 21, 1e-3, 2.0, 12, 0.0);
  const auto tr = neumann_trace(extend_radial(poisson_profile(), g, 1, 0.5));
  CHECK(tr.values[0] == doctest::Approx(1.0).epsilon(1e-6));
  for (std::size_t i = 0; i < tr.r.size(); ++i) {
    const double x = tr.r[i];
    CHECK(std::abs(tr.values[i] - (1 - x * x) / std::pow(1 + x * x, 2)) < 1e-3);
  }
  const auto P = ProblemParams::make(1, 0.25, 0.0, 3.0);
  const auto gs = HalfSpaceGrid::make(5.0, 11, 1e-3, 2.0, 12, 0.5);
  const auto flat = neumann_trace(HalfSpaceField::from_function(gs, P, [](double, double) { return 1.0; }));
  for (double v : flat.values) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("frac_laplacian_oracle") {
  std::vector<double> xs{0.0, 0.5, 1.0, 2.0, 4.0};
  const auto pl = frac_laplacian_oracle(poisson_profile(), 1, 0.5, xs);
  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(std::abs(pl.values[i] - (1 - xs[i] * xs[i]) / std::pow(1 + xs[i] * xs[i], 2)) < 1e-8);
  // mpmath Fourier integrals
  const std::vector<double> x3{0.0, 1.0, 3.0};
  const auto q = frac_laplacian_oracle(gaussian(), 1, 0.25, x3);
  CHECK(q.values[0] == doctest::Approx(0.9777410674469238).epsilon(1e-7));
  CHECK(q.values[1] == doctest::Approx(0.1219324323830566).epsilon(1e-7));
  CHECK(q.values[2] == doctest::Approx(-0.07751860146727872).epsilon(1e-7));
  const auto t = frac_laplacian_oracle(gaussian(), 1, 0.75, x3);
  CHECK(t.values[0] == doctest::Approx(1.446409084632077).epsilon(1e-7));
  CHECK(t.values[1] == doctest::Approx(-0.3457269542033713).epsilon(1e-7));
  CHECK(t.values[2] == doctest::Approx(-0.04946836305513406).epsilon(1e-7));
  const std::vector<double> x4{0.0, 0.5, 1.0, 2.0};
  const auto near = frac_laplacian_oracle(gaussian(), 1, 0.999, x4);
  const double ref[] = {1.99715738843, 0.778404579766, -0.733809093127, -0.256594856576};
  for (int i = 0; i < 4; ++i) CHECK(near.values[i] == doctest::Approx(ref[i]).epsilon(1e-8));
  // the gap to −u'' closes as s → 1
  const auto nearer = frac_laplacian_oracle(gaussian(), 1, 0.9999, {0.0});
  CHECK(std::abs(nearer.values[0] - 2.0) < 0.2 * std::abs(near.values[0] - 2.0));
  CHECK_THROWS_AS(frac_laplacian_oracle(gaussian(), 2, 0.5, {0.0}), Error);
  const auto flat = RadialProfile::analytic([](double) { return 1.0; }, 1.0, TailModel::constant(1.0));
  CHECK_THROWS_AS(frac_laplacian_oracle(flat, 1, 0.5, {0.0}), Error);
}

TEST_CASE("trace identity at s = 0.25 and 0.75") {
  for (double s : {0.25, 0.75}) {
    HalfSpaceGrid g;
    for (int i = 0; i <= 12; ++i) g.r.push_back(0.25 * i);
    for (int j = 0; j < 8; ++j) g.y.push_back(1e-3 * std::pow(2.0, j));
    g.weight_exponent = 1.0 - 2.0 * s;
    const auto tr = neumann_trace(extend_radial(gaussian(), g, 1, s));
    const auto ref = frac_laplacian_oracle(gaussian(), 1, s, g.r);
    double err = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < g.r.size(); ++i) {
      err = std::max(err, std::abs(tr.values[i] - kappa_s(s) * ref.values[i]));
      sup = std::max(sup, std::abs(kappa_s(s) * ref.values[i]));
    }
    CAPTURE(s);
    CHECK(err / sup < 1e-2);
  }
}
