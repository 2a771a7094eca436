#include "fhle/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fhle/error.hpp"

namespace fhle {

double TailModel::operator()(double r) const {
  switch (kind) {
    case Kind::None: return 0.0;
    case Kind::Constant: return coefficient;
    case Kind::PowerLaw: return coefficient * std::pow(r, -exponent);
  }
  return 0.0;
}

RadialProfile RadialProfile::analytic(std::function<double(double)> f, double scale, TailModel decay) {
  if (!(scale > 0.0)) fail(ErrorKind::InvalidParameter, "profile scale must be positive");
  RadialProfile p;
  p.f_ = std::move(f);
  p.scale_ = scale;
  p.tail_ = decay;
  return p;
}

RadialProfile RadialProfile::sampled(std::vector<double> r, std::vector<double> u, TailModel tail) {
  const std::size_t n = r.size();
  if (n < 3 || u.size() != n) fail(ErrorKind::InvalidParameter, "sampled profile needs >= 3 matching samples");
  for (std::size_t i = 1; i < n; ++i)
    if (!(r[i] > r[i - 1])) fail(ErrorKind::InvalidParameter, "sample radii must increase strictly");
  if (r.front() < 0.0) fail(ErrorKind::InvalidParameter, "sample radii must be >= 0");

  // Cubic spline: zero slope at r = 0 when the samples start there, natural
  // end conditions otherwise. Tridiagonal system solved by the Thomas method.
  std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = r[i] - r[i - 1], h1 = r[i + 1] - r[i];
    a[i] = h0 / 6.0;
    b[i] = (h0 + h1) / 3.0;
    c[i] = h1 / 6.0;
    d[i] = (u[i + 1] - u[i]) / h1 - (u[i] - u[i - 1]) / h0;
  }
  if (r.front() == 0.0) {
    const double h = r[1] - r[0];
    b[0] = h / 3.0;
    c[0] = h / 6.0;
    d[0] = (u[1] - u[0]) / h;
  } else {
    b[0] = 1.0;
  }
  b[n - 1] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  std::vector<double> m(n, 0.0);
  m[n - 1] = d[n - 1] / b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m[i] = (d[i] - c[i] * m[i + 1]) / b[i];

  RadialProfile p;
  p.r_ = std::move(r);
  p.u_ = std::move(u);
  p.m_ = std::move(m);
  p.tail_ = tail;
  p.scale_ = std::max(p.r_[1] - p.r_[0], 0.1 * (p.r_.back() - p.r_.front()));
  return p;
}

double RadialProfile::spline(double r) const {
  const auto it = std::upper_bound(r_.begin(), r_.end(), r);
  std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(1, it - r_.begin())) - 1;
  i = std::min(i, r_.size() - 2);
  const double h = r_[i + 1] - r_[i];
  const double A = (r_[i + 1] - r) / h, B = (r - r_[i]) / h;
  return A * u_[i] + B * u_[i + 1] + ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

double RadialProfile::operator()(double r) const {
  r = std::abs(r);
  if (!is_sampled()) return f_(r);
  if (r <= r_.back()) return spline(std::max(r, r_.front()));
  return tail_(r);
}

double RadialProfile::r_max() const {
  return is_sampled() ? r_.back() : std::numeric_limits<double>::infinity();
}

}  // namespace fhle
