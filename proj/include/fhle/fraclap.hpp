#pragma once

#include <vector>

#include "fhle/parallel.hpp"
#include "fhle/profile.hpp"

namespace fhle {

struct OracleOptions {
  double cutoff_start = 0.0;      // initial frequency cutoff; 0 picks 16 / scale
  double cutoff_max = 0.0;        // largest cutoff tried; 0 picks 1024 / scale
  double tail_fraction = 1e-6;    // allowed spectral mass in the top half of [0, cutoff]
  double tail_start = 0.0;        // where a power-law tail model takes over; 0 picks 400 * scale
  int panel_nodes = 16;
  Execution exec = Execution::Parallel;
};

// (-Δ)^s u at the radii r_out, through the radial Fourier transform
// (cosine transform for n = 1, sine transform for n = 3), the multiplier
// |ξ|^{2s} and the inverse transform. Independent of the extension machinery.
SampledRadial frac_laplacian_oracle(const RadialProfile& u, int n, double s, const std::vector<double>& r_out,
                                    const OracleOptions& opt = {});

// ∫_z^∞ v^{-q} cos(v) dv (sine = false) or ∫_z^∞ v^{-q} sin(v) dv (sine = true),
// z > 0, q > 0, by half-period summation with repeated averaging.
double oscillatory_tail(double z, double q, bool sine);

}  // namespace fhle
