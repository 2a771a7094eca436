#pragma once

#include <optional>
#include <vector>

#include "fhle/field.hpp"
#include "fhle/parallel.hpp"
#include "fhle/params.hpp"

namespace fhle {

// λ^γ u_e(λX) with γ = (2s+a)/(p-1) from the field's params, or an explicit degree.
HalfSpaceField rescale(const HalfSpaceField& field, double lambda);
HalfSpaceField rescale(const HalfSpaceField& field, double lambda, double degree);

// Coefficient of the boundary-sphere term of the first-order energy. The
// (s+a/2)/(p-1) form is the one whose λ-derivative is the displayed square;
// the (p+1) form is kept only to demonstrate that it breaks that identity.
enum class SphereCoefficient { PMinusOne, PPlusOne };

struct EnergyOptions {
  double rel_tol = 1e-9;
  double fd_eta = 2e-3;  // relative finite-difference step for field derivatives
  SphereCoefficient sphere = SphereCoefficient::PMinusOne;
  Execution exec = Execution::Parallel;
};

struct EnergyParts {
  double bulk = 0.0;       // λ^{e} · ½∫ y^{1-2s}|∇u_e|^2
  double nonlinear = 0.0;  // -λ^{e} · κ_s/(p+1) ∫ |x|^a |u|^{p+1}
  double sphere = 0.0;     // λ^{e-1} · coefficient · ∫_{∂B} y^{1-2s} u_e^2
  double total() const { return bulk + nonlinear + sphere; }
};

EnergyParts energy_first_order_parts(const HalfSpaceField& field, double lambda, const EnergyOptions& opt = {});
double energy_first_order(const HalfSpaceField& field, double lambda, const EnergyOptions& opt = {});

// λ^{e} ∫_{∂B_λ ∩ R^{n+1}_+} y^{1-2s} (∂_ρ u_e + γ u_e/ρ)^2 dσ, e = (2s(p+1)+2a)/(p-1) - n.
double energy_derivative_first_order(const HalfSpaceField& field, double lambda, const EnergyOptions& opt = {});

struct EnergyCurve {
  std::vector<double> lambdas;
  std::vector<double> values;
  std::vector<EnergyParts> parts;
  double rel_tol = 0.0;
  double fd_eta = 0.0;
};

// First-order energy at each λ (strictly increasing), evaluated in parallel.
EnergyCurve energy_curve(const HalfSpaceField& field, const std::vector<double>& lambdas, const EnergyOptions& opt = {});

// Δ_b w = w_rr + (n-1)/r w_r + w_yy + (b/y) w_y on the grid interior, b = 3-2s
// taken from the field's weight exponent.
HalfSpaceField delta_b(const HalfSpaceField& field);

struct HigherOrderOptions {
  double rel_tol = 1e-9;
  double fd_eta = 2e-3;
  double c_ns = 1.0;  // the boundary constant of the higher-order system
  Execution exec = Execution::Parallel;
};

struct HigherOrderParts {
  double bulk = 0.0;            // r^{e} ∫ ½ y^{3-2s} |Δ_b u_e|^2
  double nonlinear = 0.0;       // -r^{e} C/(p+1) ∫ |x|^a |u|^{p+1}
  double sphere_mass = 0.0;     // -K r^{-3+2s+2γ-n} ∫_{∂B} y^{3-2s} u_e^2
  double sphere_mass_rate = 0.0;  // -K d/dr[r^{2γ+2s-2-n} ∫_{∂B} y^{3-2s} u_e^2]
  double radial_rate = 0.0;     // ½ r^3 d/dr[r^{2γ+2s-3-n} ∫_{∂B} y^{3-2s}(γu_e/r + ∂_r u_e)^2]
  double tangential_rate = 0.0; // ½ d/dr[r^{e} ∫_{∂B} y^{3-2s}(|∇u_e|^2 - |∂_r u_e|^2)]
  double tangential = 0.0;      // ½ r^{e-1} ∫_{∂B} y^{3-2s}(|∇u_e|^2 - |∂_r u_e|^2)
  double total() const {
    return bulk + nonlinear + sphere_mass + sphere_mass_rate + radial_rate + tangential_rate + tangential;
  }
};

// Seven-term energy for 1 < s < 2. d/dr terms use centered differences with
// step fd_step (<= 0 selects 1e-3·λ).
HigherOrderParts energy_higher_order_parts(const HalfSpaceField& field, double lambda, double fd_step = 0.0,
                                           const HigherOrderOptions& opt = {});
double energy_higher_order(const HalfSpaceField& field, double lambda, double fd_step = 0.0,
                           const HigherOrderOptions& opt = {});

struct DimensionReport {
  double n = 0.0;
  double first_rhs = 0.0;   // (p+4s+2a-1)/(p+2s+a-1) + (2s+a)/(p-1) - b
  bool first_holds = false;
  double second_rhs = 0.0;  // (2s(p+1)+2a)/(p-1)
  bool second_holds = false;
  bool implication_consistent = false;  // second ⇒ first on this tuple
  double first_margin() const { return n - first_rhs; }
  double second_margin() const { return n - second_rhs; }
};

DimensionReport dimension_conditions(const ProblemParams& params);

}  // namespace fhle
