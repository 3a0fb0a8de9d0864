#include "spinor_inv/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinv {
namespace {

constexpr cplx kI{0.0, 1.0};

double value_of(const Potential& f, double t) { return f ? f(t) : 0.0; }

void check_params(const EvolutionParams& p) {
  if (!(p.dt > 0.0) || !std::isfinite(p.dt)) throw std::invalid_argument("dt must be positive");
  if (!std::isfinite(p.t0) || !std::isfinite(p.t1) || p.t1 < p.t0) {
    throw std::invalid_argument("time interval must be finite with t1 >= t0");
  }
  if (p.m < 0.0) throw std::invalid_argument("mass must be nonnegative");
}

// Tr[Psi^T M Psi N] for a two-particle matrix.
cplx trace_form(const Mat4& psi, const Mat4& m, const Mat4& n) { return (psi.transpose() * m * psi * n).trace(); }

double relative_fd_residual(const std::vector<double>& t, const std::vector<cplx>& f, const std::vector<cplx>& rhs) {
  if (t.size() < 3) throw std::invalid_argument("derivative check needs at least 3 grid points");
  double scale = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) scale = std::max({scale, std::abs(f[i]), std::abs(rhs[i])});
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const cplx fd = (f[i + 1] - f[i - 1]) / (t[i + 1] - t[i - 1]);
    worst = std::max(worst, std::abs(fd - rhs[i]));
  }
  return worst / scale;
}

}  // namespace

Potential constant_potential(double value) {
  return [value](double) { return value; };
}

Mat4 reduced_generator(const EvolutionParams& params, double t) {
  Mat4 inner = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu) inner += -kI * params.q * value_of(params.A[mu], t) * gamma(mu);
  inner += -kI * params.m * Mat4::Identity();
  inner += params.g * value_of(params.phi, t) * special(Special::G5);
  for (int k = 1; k <= 3; ++k) inner += -kI * params.p[k - 1] * gamma(k);
  return gamma(0) * inner;
}

Mat4 rk4_step_matrix(const EvolutionParams& params, double t, double dt) {
  const Mat4 id = Mat4::Identity();
  const Mat4 g0 = reduced_generator(params, t);
  const Mat4 gh = reduced_generator(params, t + 0.5 * dt);
  const Mat4 g1 = reduced_generator(params, t + dt);
  const Mat4 k1 = g0;
  const Mat4 k2 = gh * (id + 0.5 * dt * k1);
  const Mat4 k3 = gh * (id + 0.5 * dt * k2);
  const Mat4 k4 = g1 * (id + dt * k3);
  return id + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::vector<double> time_grid(const EvolutionParams& params) {
  check_params(params);
  const auto steps = static_cast<std::size_t>(std::llround((params.t1 - params.t0) / params.dt));
  std::vector<double> t(steps + 1);
  for (std::size_t n = 0; n <= steps; ++n) t[n] = params.t0 + static_cast<double>(n) * params.dt;
  return t;
}

Trajectory evolve(const Spinor& chi0, const EvolutionParams& params) {
  Trajectory out;
  out.times = time_grid(params);
  out.spinors.reserve(out.times.size());
  Spinor chi = chi0;
  out.spinors.push_back(chi);
  for (std::size_t n = 1; n < out.times.size(); ++n) {
    chi = rk4_step_matrix(params, out.times[n - 1], params.dt) * chi;
    out.spinors.push_back(chi);
  }
  return out;
}

Spinor exact_constant_solution(const Spinor& chi0, const EvolutionParams& params, double t) {
  const Mat4 g = reduced_generator(params, params.t0) * cplx(t - params.t0);
  return g.exp() * chi0;
}

cplx form_rhs(FormKind kind, const Spinor& psi, const Spinor& phi, const EvolutionParams& params, double t) {
  const double a0 = value_of(params.A[0], t);
  const double ph = value_of(params.phi, t);
  const Mat4 id = Mat4::Identity();
  const Mat4& g5 = special(Special::G5);
  Mat4 spatial_a = Mat4::Zero();
  for (int k = 1; k <= 3; ++k) spatial_a += value_of(params.A[k], t) * gamma(k);
  switch (kind) {
    case FormKind::C:
      return 2.0 * (psi.transpose() * special(Special::C) * (-kI * params.q * a0 * id - kI * params.m * gamma(0)) * phi)(0);
    case FormKind::C5:
      return 2.0 *
             (psi.transpose() * special(Special::C5) * (-kI * params.q * a0 * id + params.g * ph * special(Special::G05)) *
              phi)(0);
    case FormKind::G0: {
      cplx v = 2.0 * (psi.adjoint() * (-kI * params.q * spatial_a + params.g * ph * g5) * phi)(0);
      for (int k = 1; k <= 3; ++k) {
        const double pk = params.p[k - 1];
        v += (-kI * pk) * (psi.adjoint() * gamma(k) * phi)(0) - (psi.adjoint() * gamma(k) * (kI * pk * phi))(0);
      }
      return v;
    }
    case FormKind::G05: {
      cplx v = 2.0 * (psi.adjoint() * g5 * (kI * params.q * spatial_a + kI * params.m * id) * phi)(0);
      for (int k = 1; k <= 3; ++k) {
        const double pk = params.p[k - 1];
        v += (psi.adjoint() * g5 * gamma(k) * (kI * pk * phi))(0) - (-kI * pk) * (psi.adjoint() * g5 * gamma(k) * phi)(0);
      }
      return v;
    }
  }
  return 0.0;
}

double form_evolution_residual(FormKind kind, const Trajectory& psi, const Trajectory& phi,
                               const EvolutionParams& params) {
  if (psi.times != phi.times || psi.spinors.size() != psi.times.size() || phi.spinors.size() != phi.times.size()) {
    throw std::invalid_argument("trajectories do not share a grid");
  }
  std::vector<cplx> f, rhs;
  for (std::size_t i = 0; i < psi.times.size(); ++i) {
    f.push_back(form(kind, psi.spinors[i], phi.spinors[i]));
    rhs.push_back(form_rhs(kind, psi.spinors[i], phi.spinors[i], params, psi.times[i]));
  }
  return relative_fd_residual(psi.times, f, rhs);
}

InvariantEvolutionReport invariant_evolution_check(std::string_view name, const StateTensor& state0,
                                                   const EvolutionParams& alice) {
  if (state0.particles() != 2) throw std::invalid_argument("invariant evolution needs a two-particle state");
  const bool is_i1 = name == "I1";
  if (!is_i1 && name != "I2") throw std::invalid_argument("invariant evolution supports I1 and I2");

  InvariantEvolutionReport r;
  r.name = std::string(name);
  r.times = time_grid(alice);
  r.modulus_law = is_i1 ? alice.m == 0.0 : alice.g == 0.0;
  r.expected_slope = -2.0 * alice.q * value_of(alice.A[0], alice.t0);

  const Mat4& c = special(is_i1 ? Special::C : Special::C5);
  std::vector<cplx> rhs;
  Mat4 psi = state0.as_matrix();
  for (std::size_t n = 0; n < r.times.size(); ++n) {
    if (n > 0) psi = rk4_step_matrix(alice, r.times[n - 1], alice.dt) * psi;
    const double t = r.times[n];
    const double a0 = value_of(alice.A[0], t);
    const cplx value = 0.5 * trace_form(psi, c, c);
    r.values.push_back(value);
    if (is_i1) {
      rhs.push_back(-2.0 * kI * alice.q * a0 * value - kI * alice.m * trace_form(psi, gamma(0) * c, c));
    } else {
      const double ph = value_of(alice.phi, t);
      rhs.push_back(-2.0 * kI * alice.q * a0 * value + alice.g * ph * trace_form(psi, c * special(Special::G05), c));
    }
  }
  r.rhs_residual = relative_fd_residual(r.times, r.values, rhs);

  const double m0 = std::abs(r.values.front());
  double unwrapped = std::arg(r.values.front());
  double prev = unwrapped;
  std::vector<double> phase{unwrapped};
  for (std::size_t n = 1; n < r.values.size(); ++n) {
    r.modulus_drift = std::max(r.modulus_drift, std::abs(std::abs(r.values[n]) - m0));
    const double a = std::arg(r.values[n]);
    double d = a - prev;
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
    unwrapped += d;
    prev = a;
    phase.push_back(unwrapped);
  }
  double tm = 0.0, pm = 0.0;
  for (std::size_t n = 0; n < phase.size(); ++n) {
    tm += r.times[n];
    pm += phase[n];
  }
  tm /= static_cast<double>(phase.size());
  pm /= static_cast<double>(phase.size());
  double num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < phase.size(); ++n) {
    num += (r.times[n] - tm) * (phase[n] - pm);
    den += (r.times[n] - tm) * (r.times[n] - tm);
  }
  r.phase_slope = den > 0.0 ? num / den : 0.0;
  return r;
}

}  // namespace spinv
