#pragma once

/// \file
/// Time evolution of momentum eigenstates psi(t, x) = chi(t) exp(i p.x)
/// under the Dirac equation with electromagnetic and pseudoscalar
/// couplings, and checks of the derivative laws of the forms and of I1/I2.
/// See docs/dynamics.md for the reduced generator.

#include "spinor_inv/forms.hpp"
#include "spinor_inv/state.hpp"

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace spinv {

/// A potential as a function of time. An empty function means zero.
using Potential = std::function<double(double)>;

Potential constant_potential(double value);

struct EvolutionParams {
  std::array<double, 3> p{};  // momentum
  double m = 0.0;             // mass, >= 0
  double q = 0.0;             // charge
  double g = 0.0;             // pseudoscalar coupling
  std::array<Potential, 4> A; // A_0 .. A_3 (lower index)
  Potential phi;              // pseudoscalar field
  double t0 = 0.0;
  double t1 = 1.0;
  double dt = 1e-3;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Spinor> spinors;
};

/// d chi / dt = G(t) chi with
/// G = gamma^0 [ -i q gamma^mu A_mu - i m + g gamma^5 phi - i p_k gamma^k ].
Mat4 reduced_generator(const EvolutionParams& params, double t);

/// One classical RK4 step as a matrix: chi(t + dt) ~ M chi(t).
Mat4 rk4_step_matrix(const EvolutionParams& params, double t, double dt);

/// Grid t0 + n dt, n = 0..round((t1 - t0) / dt). Throws
/// std::invalid_argument for dt <= 0, t1 < t0 or nonfinite bounds or a
/// negative mass.
std::vector<double> time_grid(const EvolutionParams& params);

/// Integrates with RK4 on time_grid(params).
Trajectory evolve(const Spinor& chi0, const EvolutionParams& params);

/// exp(G (t - t0)) chi0 with G evaluated at t0. Exact only for
/// time-independent potentials.
Spinor exact_constant_solution(const Spinor& chi0, const EvolutionParams& params, double t);

/// Right-hand side of the derivative law of a form at time t.
cplx form_rhs(FormKind kind, const Spinor& psi, const Spinor& phi, const EvolutionParams& params, double t);

/// max over interior grid points of |centered difference of the form -
/// form_rhs| divided by the largest |form| or |rhs| on the grid. Throws
/// std::invalid_argument when the grids differ or have fewer than 3 points.
double form_evolution_residual(FormKind kind, const Trajectory& psi, const Trajectory& phi,
                               const EvolutionParams& params);

struct InvariantEvolutionReport {
  std::string name;
  std::vector<double> times;
  std::vector<cplx> values;
  double rhs_residual = 0.0;     // relative, as in form_evolution_residual
  bool modulus_law = false;      // m == 0 for I1, g == 0 for I2
  double modulus_drift = 0.0;    // max ||I(t)| - |I(t0)||
  double phase_slope = 0.0;      // least-squares slope of the unwrapped phase
  double expected_slope = 0.0;   // -2 q A_0(t0)
};

/// Evolves particle A of a two-particle state with params (step matrices
/// applied locally) and checks the derivative law of I1 or I2. Throws
/// std::invalid_argument unless the state has two particles and the name is
/// I1 or I2.
InvariantEvolutionReport invariant_evolution_check(std::string_view name, const StateTensor& state0,
                                                   const EvolutionParams& alice);

}  // namespace spinv
