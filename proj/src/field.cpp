#include "fhle/field.hpp"

#include <algorithm>
#include <cmath>

#include "fhle/error.hpp"

namespace fhle {

HalfSpaceGrid HalfSpaceGrid::make(double r_max, int nr, double y_min, double y_max, int ny, double weight_exponent) {
  if (nr < 2 || ny < 2) fail(ErrorKind::GridTooCoarse, "grid needs at least two nodes per direction");
  if (!(r_max > 0.0) || !(y_min > 0.0) || !(y_max > y_min)) fail(ErrorKind::InvalidParameter, "bad grid extents");
  HalfSpaceGrid g;
  g.weight_exponent = weight_exponent;
  for (int i = 0; i < nr; ++i) g.r.push_back(r_max * i / (nr - 1));
  const double q = std::log(y_max / y_min);
  for (int j = 0; j < ny; ++j) g.y.push_back(j + 1 == ny ? y_max : y_min * std::exp(q * j / (ny - 1)));
  return g;
}

HalfSpaceGrid HalfSpaceGrid::refined() const {
  HalfSpaceGrid g;
  g.weight_exponent = weight_exponent;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) g.r.push_back(0.5 * (r[i - 1] + r[i]));
    g.r.push_back(r[i]);
  }
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (j > 0) g.y.push_back(std::sqrt(y[j - 1] * y[j]));
    g.y.push_back(y[j]);
  }
  return g;
}

void HalfSpaceGrid::validate() const {
  if (r.size() < 2 || y.size() < 2) fail(ErrorKind::GridTooCoarse, "grid needs at least two nodes per direction");
  if (r.front() != 0.0) fail(ErrorKind::InvalidParameter, "radial nodes must start at 0");
  if (!(y.front() > 0.0)) fail(ErrorKind::InvalidParameter, "heights must be positive");
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!(r[i] > r[i - 1])) fail(ErrorKind::InvalidParameter, "radial nodes must increase");
  for (std::size_t j = 1; j < y.size(); ++j)
    if (!(y[j] > y[j - 1])) fail(ErrorKind::InvalidParameter, "heights must increase");
}

HalfSpaceField HalfSpaceField::from_function(const HalfSpaceGrid& grid, const ProblemParams& params,
                                             std::function<double(double, double)> f, bool keep_evaluator) {
  grid.validate();
  HalfSpaceField out;
  out.grid = grid;
  out.params = params;
  out.values.resize(grid.nr() * grid.ny());
  for (std::size_t j = 0; j < grid.ny(); ++j)
    for (std::size_t i = 0; i < grid.nr(); ++i) out.at(i, j) = f(grid.r[i], grid.y[j]);
  for (std::size_t i = 0; i < grid.nr(); ++i) out.boundary.push_back(f(grid.r[i], 0.0));
  if (keep_evaluator) out.exact = std::move(f);
  return out;
}

bool HalfSpaceField::covers(double r, double y) const {
  if (has_evaluator()) return y >= 0.0;
  return std::abs(r) <= grid.r.back() && y >= 0.0 && y <= grid.y.back();
}

namespace {

// Start index of a 4-point stencil around x in the increasing sequence xs.
std::size_t stencil_start(const std::vector<double>& xs, double x) {
  const std::size_t n = xs.size();
  if (n <= 4) return 0;
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::ptrdiff_t k = (it - xs.begin()) - 2;
  k = std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(n) - 4);
  return static_cast<std::size_t>(k);
}

void lagrange_weights(const double* xs, std::size_t m, double x, double* w) {
  for (std::size_t a = 0; a < m; ++a) {
    double v = 1.0;
    for (std::size_t b = 0; b < m; ++b)
      if (b != a) v *= (x - xs[b]) / (xs[a] - xs[b]);
    w[a] = v;
  }
}

// Radial stencil with even reflection: nodes -r_k mirror r_k so that the
// interpolant near r = 0 stays even.
struct RadialStencil {
  double nodes[4];
  std::size_t index[4];
  std::size_t count = 0;
};

RadialStencil radial_stencil(const std::vector<double>& r, double x) {
  std::vector<double> ext;
  std::vector<std::size_t> idx;
  const std::size_t mirror = std::min<std::size_t>(3, r.size() - 1);
  for (std::size_t k = mirror; k >= 1; --k) {
    ext.push_back(-r[k]);
    idx.push_back(k);
  }
  for (std::size_t k = 0; k < r.size(); ++k) {
    ext.push_back(r[k]);
    idx.push_back(k);
  }
  RadialStencil st;
  st.count = std::min<std::size_t>(4, ext.size());
  const std::size_t start = stencil_start(ext, x);
  for (std::size_t a = 0; a < st.count; ++a) {
    st.nodes[a] = ext[start + a];
    st.index[a] = idx[start + a];
  }
  return st;
}

}  // namespace

double HalfSpaceField::boundary_value(double r) const {
  r = std::abs(r);
  if (has_evaluator()) return exact(r, 0.0);
  if (r > grid.r.back()) fail(ErrorKind::DomainExceeded, "radius beyond sampled boundary");
  const RadialStencil st = radial_stencil(grid.r, r);
  double w[4];
  lagrange_weights(st.nodes, st.count, r, w);
  double v = 0.0;
  for (std::size_t a = 0; a < st.count; ++a) v += w[a] * boundary[st.index[a]];
  return v;
}

double HalfSpaceField::value(double r, double y) const {
  r = std::abs(r);
  if (has_evaluator()) return exact(r, y);
  if (!covers(r, y)) fail(ErrorKind::DomainExceeded, "point outside the sampled field");
  const double y0 = grid.y.front();
  if (y < y0) {
    const double u0 = boundary_value(r);
    const double u1 = value(r, y0);
    const double s = params.s;
    return u0 + (u1 - u0) * std::pow(y / y0, 2.0 * s);
  }
  const RadialStencil st = radial_stencil(grid.r, r);
  double wr[4];
  lagrange_weights(st.nodes, st.count, r, wr);
  const std::size_t jy = stencil_start(grid.y, y);
  const std::size_t my = std::min<std::size_t>(4, grid.ny());
  double wy[4];
  lagrange_weights(&grid.y[jy], my, y, wy);
  double v = 0.0;
  for (std::size_t b = 0; b < my; ++b) {
    double row = 0.0;
    for (std::size_t a = 0; a < st.count; ++a) row += wr[a] * at(st.index[a], jy + b);
    v += wy[b] * row;
  }
  return v;
}

double HalfSpaceField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  for (double v : boundary) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace fhle
