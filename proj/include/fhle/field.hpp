#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fhle/params.hpp"

namespace fhle {

// Tensor grid on [0, R] x [y_0, Y] in (radial, height) coordinates. r starts
// at 0; heights stay strictly positive because the weight degenerates at y=0.
struct HalfSpaceGrid {
  std::vector<double> r;
  std::vector<double> y;
  double weight_exponent = 0.0;

  // Uniform radii 0..r_max, geometric heights y_min..y_max.
  static HalfSpaceGrid make(double r_max, int nr, double y_min, double y_max, int ny, double weight_exponent);

  // Halves every radial cell and splits every height cell at its geometric mean.
  HalfSpaceGrid refined() const;

  void validate() const;
  std::size_t nr() const { return r.size(); }
  std::size_t ny() const { return y.size(); }
};

// u_e sampled on a HalfSpaceGrid plus its boundary trace u(r_i) = u_e(r_i, 0).
// A field may also carry a closed-form evaluator; when present it is used for
// off-grid values instead of interpolation and declares the field valid on
// the whole half-space.
struct HalfSpaceField {
  HalfSpaceGrid grid;
  std::vector<double> values;    // values[j * nr + i] = u_e(r_i, y_j)
  std::vector<double> boundary;  // u(r_i)
  ProblemParams params;
  std::function<double(double, double)> exact;

  static HalfSpaceField from_function(const HalfSpaceGrid& grid, const ProblemParams& params,
                                      std::function<double(double, double)> f, bool keep_evaluator = true);

  double at(std::size_t i, std::size_t j) const { return values[j * grid.nr() + i]; }
  double& at(std::size_t i, std::size_t j) { return values[j * grid.nr() + i]; }

  bool has_evaluator() const { return static_cast<bool>(exact); }
  // True when value() is defined at (r, y) without extrapolating past the grid.
  bool covers(double r, double y) const;
  // u_e(r, y): closed form if available, else local bicubic Lagrange
  // interpolation (even in r). Between the boundary and the lowest level the
  // field is blended in y^{2s}, the leading boundary expansion variable.
  double value(double r, double y) const;
  double boundary_value(double r) const;
  double max_abs() const;
};

}  // namespace fhle
