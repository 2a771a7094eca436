#pragma once

#include <functional>
#include <vector>

namespace fhle {

// Far-field model of a radial function beyond its sampled range.
struct TailModel {
  enum class Kind { None, Constant, PowerLaw };
  Kind kind = Kind::None;
  double coefficient = 0.0;
  double exponent = 0.0;  // u(r) ~ coefficient * r^{-exponent}

  static TailModel none() { return {}; }
  static TailModel constant(double c) { return {Kind::Constant, c, 0.0}; }
  static TailModel power_law(double c, double k) { return {Kind::PowerLaw, c, k}; }

  double operator()(double r) const;
};

// A sampled radial function: values at increasing radii.
struct SampledRadial {
  std::vector<double> r;
  std::vector<double> values;
};

// A radial function u(|x|), either closed-form or sampled. Sampled profiles are
// interpolated by a cubic spline with zero slope at r = 0 (u is even) and
// continue past the last sample through their tail model.
class RadialProfile {
 public:
  // `scale` is the length over which the profile varies; quadratures use it
  // to place breakpoints. `decay` describes the far field (used to integrate
  // oscillatory tails exactly); closed-form profiles without one are assumed
  // to decay faster than any power.
  static RadialProfile analytic(std::function<double(double)> f, double scale = 1.0,
                                TailModel decay = TailModel::none());
  static RadialProfile sampled(std::vector<double> r, std::vector<double> u, TailModel tail = TailModel::none());

  double operator()(double r) const;

  bool is_sampled() const { return !r_.empty(); }
  // Last sampled radius; +infinity for closed-form profiles.
  double r_max() const;
  double scale() const { return scale_; }
  const TailModel& tail() const { return tail_; }

 private:
  std::function<double(double)> f_;
  std::vector<double> r_, u_, m_;  // spline knots, values, second derivatives
  TailModel tail_;
  double scale_ = 1.0;
  double spline(double r) const;
};

}  // namespace fhle
