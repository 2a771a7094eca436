#include "fhle/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include "fhle/specfun.hpp"

namespace fhle::quad {

namespace detail {
const double kronrod_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kronrod_w[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double gauss_w[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
}  // namespace detail

Rule gauss_jacobi(int m, double alpha, double beta) {
  if (m < 1) fail(ErrorKind::InvalidParameter, "gauss_jacobi: need at least one node");
  if (!(alpha > -1.0 && beta > -1.0)) fail(ErrorKind::InvalidParameter, "gauss_jacobi: exponents must exceed -1");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(m), sub(m > 1 ? m - 1 : 1);
  for (int k = 0; k < m; ++k) {
    const double d = 2.0 * k + ab;
    diag(k) = (k == 0) ? (beta - alpha) / (ab + 2.0)
                       : (beta * beta - alpha * alpha) / (d * (d + 2.0));
  }
  for (int k = 1; k < m; ++k) {
    const double d = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      // (k+α+β) cancels against (2k+α+β-1) at k = 1; keep the reduced form.
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (d * d * (d + 1.0) * (d - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }
  Rule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) -
                         log_gamma(ab + 2.0);
  const double mu0 = std::exp(log_mu0);
  if (m == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(m - 1), Eigen::ComputeEigenvectors);
  for (int i = 0; i < m; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

Rule affine(const Rule& rule, double a, double b) {
  Rule out;
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  out.nodes.reserve(rule.nodes.size());
  out.weights.reserve(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.nodes.push_back(c + h * rule.nodes[i]);
    out.weights.push_back(h * rule.weights[i]);
  }
  return out;
}

FixedNodes tanh_sinh_nodes(double a, double b, double h, double t_max) {
  FixedNodes out;
  const double half = 0.5 * (b - a), hpi = 0.5 * M_PI;
  const int kmax = static_cast<int>(std::ceil(t_max / h));
  for (int k = -kmax; k <= kmax; ++k) {
    const double t = k * h;
    const double u = hpi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    const double near = (b - a) * e / (1.0 + e);
    if (!(near > 0.0)) continue;
    const double ch = std::cosh(u);
    const double w = h * half * hpi * std::cosh(t) / (ch * ch);
    if (!(w > 0.0)) continue;
    const double far = (b - a) - near;
    out.x.push_back(t < 0.0 ? a + near : b - near);
    out.dist_a.push_back(t < 0.0 ? near : far);
    out.dist_b.push_back(t < 0.0 ? far : near);
    out.w.push_back(w);
  }
  return out;
}

}  // namespace fhle::quad
