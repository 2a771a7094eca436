#pragma once

#include <cmath>
#include <string>

#include "fhle/error.hpp"

namespace fhle {

// The tuple (n, s, a, p) of (-Δ)^s u = |x|^a |u|^{p-1} u together with its
// derived exponents. Construct through make(), which enforces the invariants.
struct ProblemParams {
  int n = 1;
  double s = 0.5;
  double a = 0.0;
  double p = 2.0;

  static ProblemParams make(int n, double s, double a, double p) {
    validate(n, s, a, p);
    return ProblemParams{n, s, a, p};
  }

  static void validate(int n, double s, double a, double p) {
    if (n < 1) fail(ErrorKind::InvalidParameter, "n=" + std::to_string(n) + " must be >= 1");
    if (!(s > 0.0 && s < 2.0)) fail(ErrorKind::InvalidParameter, "s must lie in (0,2)");
    if (s == 1.0) fail(ErrorKind::InvalidParameter, "s=1 unsupported");
    if (!(a >= 0.0) || !std::isfinite(a)) fail(ErrorKind::InvalidParameter, "a must be finite and >= 0");
    if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorKind::InvalidParameter, "p must be finite and > 1");
  }

  // Weight exponent of the higher-order extension, b = 3 - 2s.
  double b() const { return 3.0 - 2.0 * s; }
  // Homogeneity degree of the singular solution, (2s+a)/(p-1).
  double beta() const { return (2.0 * s + a) / (p - 1.0); }
  bool dimension_exceeds_order() const { return n > 2.0 * s; }
  // α = (n-2s)/2 - β; meaningful only when n > 2s.
  double alpha() const {
    if (!dimension_exceeds_order()) fail(ErrorKind::DimensionTooSmall, "alpha requires n > 2s");
    return 0.5 * (n - 2.0 * s) - beta();
  }
  // Scaling exponent of the energies, (2s(p+1)+2a)/(p-1).
  double energy_exponent() const { return (2.0 * s * (p + 1.0) + 2.0 * a) / (p - 1.0); }
};

// Validation of the (n, s) pair used by operations that do not need a, p.
inline void validate_order(int n, double s) { ProblemParams::validate(n, s, 0.0, 2.0); }

}  // namespace fhle
