#include <doctest.h>

#include <cmath>

#include "fhle/error.hpp"
#include "fhle/exponents.hpp"
#include "fhle/kernels.hpp"
#include "fhle/specfun.hpp"

using namespace fhle;

TEST_CASE("kernel_K special values") {
  CHECK(kernel_K({1.0, 3, 0.5}, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(kernel_K({0.3, 3, 0.5}, 0.0) == doctest::Approx(kernel_K({1.7, 3, 0.5}, 0.0)).epsilon(1e-10));
  for (double c : {-0.99, -0.3, 0.4, 0.9})
    CHECK(kernel_K({0.3, 3, 0.5}, c) == doctest::Approx(kernel_K({1.7, 3, 0.5}, c)).epsilon(1e-10));
  CHECK(kernel_K_complement({1.0, 3, 0.5}, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("kernel_K errors") {
  CHECK_THROWS_AS(kernel_K({0.5, 3, 0.5}, 1.0 - 1e-7), Error);
  try {
    kernel_K({0.5, 3, 0.5}, 1.0 - 1e-7);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularEvaluation);
  }
  // n − 1 − α ≤ −1 makes t → 0 non-integrable
  try {
    kernel_K({2.5, 1, 0.25}, 0.0);
    FAIL("expected NonConvergent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergent);
  }
  CHECK_THROWS_AS(kernel_K({0.5, 3, 1.5}, 0.0), Error);
}

TEST_CASE("a_constant and hardy_integral") {
  const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
  const double A = a_constant(P);
  CHECK(A == doctest::Approx(5.6982187577640563716).epsilon(1e-8));
  const double H = hardy_integral(3, 0.5);
  CHECK(H == doctest::Approx(2.0 * M_PI).epsilon(1e-8));
  CHECK(A / H == doctest::Approx((1.0 / std::sqrt(3.0)) / (2.0 / M_PI)).epsilon(1e-6));
  CHECK(normalization_ratio(3, 0.5) == doctest::Approx(H / hardy_gamma(3, 0.5)).epsilon(1e-8));
  // γ → 0 as p → ∞
  CHECK(a_constant(ProblemParams::make(3, 0.5, 1.0, 1e7)) < 1e-5);
  const double h1 = hardy_integral(1, 0.25);
  CHECK(std::isfinite(h1));
  CHECK(h1 > 0.0);
  CHECK_THROWS_AS(a_constant(ProblemParams::make(3, 0.5, 1.0, 2.0)), Error);
}

TEST_CASE("homogeneous_residual") {
  const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
  const double A = a_constant(P);
  ResidualOptions ro;
  ro.a_constant = A;
  CHECK(homogeneous_residual(SphericalProfile::constant(3, 16, 0.0), P, ro) == 0.0);
  const double psi = std::pow(A, 1.0 / (P.p - 1));
  CHECK(homogeneous_residual(SphericalProfile::constant(3, 16, psi), P, ro) < 1e-5);
  const double psi2 = 2.0 * psi;
  const double expected = std::abs(psi2 * A - std::pow(psi2, P.p));
  CHECK(homogeneous_residual(SphericalProfile::constant(3, 16, psi2), P, ro) ==
        doctest::Approx(expected).epsilon(1e-6));
}
