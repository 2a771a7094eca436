#pragma once

#include "fhle/field.hpp"
#include "fhle/parallel.hpp"
#include "fhle/profile.hpp"

namespace fhle {

// p_{n,s}: the constant making ∫ p y^{2s} (|x-t|^2 + y^2)^{-(n+2s)/2} dt = 1,
// obtained by normalizing the kernel numerically (memoized per (n, s)).
double poisson_normalization(int n, double s);

// Mass of the normalized Poisson kernel at height y, for checking the
// normalization independently.
double poisson_mass(int n, double s, double y);

struct ExtendOptions {
  double rel_tol = 1e-12;
  double tail_tolerance = 1e-8;  // allowed truncation when a sampled profile has no tail model
  Execution exec = Execution::Parallel;
};

// Value of the extension u_e(r, y) = ∫ P((x,y), t) u(|t|) dt at one point.
double extend_point(const RadialProfile& u, int n, double s, double r, double y, const ExtendOptions& opt = {});

// The extension sampled on a grid (one independent quadrature per node).
HalfSpaceField extend_radial(const RadialProfile& u, const HalfSpaceGrid& grid, int n, double s,
                             const ExtendOptions& opt = {});

// max over interior nodes of |div(y^{1-2s} ∇u_e)| / (y^{1-2s} max|u_e|), from
// a finite-volume discretization that treats y^{2s} exactly.
double degenerate_residual(const HalfSpaceField& field);

struct NeumannOptions {
  int levels = 5;              // lowest y-levels used by the extrapolation
  double tolerance = 1e-6;     // relative to max|u|
  double radial_scale = 1.0;   // levels must sit below 0.1 * radial_scale
};

// -lim_{y->0} y^{1-2s} ∂_y u_e at every radial node, by extrapolation of
// (u_e - u)/y^{2s} in the boundary expansion exponents.
SampledRadial neumann_trace(const HalfSpaceField& field, const NeumannOptions& opt = {});

}  // namespace fhle
