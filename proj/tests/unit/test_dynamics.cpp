#include "spinor_inv/catalog.hpp"
#include "spinor_inv/dynamics.hpp"
#include "spinor_inv/gamma.hpp"

#include <doctest.h>

#include <cmath>

using namespace spinv;

namespace {

EvolutionParams coupled() {
  EvolutionParams p;
  p.p = {0.3, -0.5, 0.7};
  p.m = 0.7;
  p.q = 0.4;
  p.g = 0.5;
  p.A = {constant_potential(0.3), constant_potential(-0.2), constant_potential(0.6),
         [](double t) { return 0.3 * std::sin(t); }};
  p.phi = [](double t) { return 0.9 * std::cos(0.5 * t); };
  p.t1 = 2.0;
  return p;
}

}  // namespace

TEST_SUITE("dynamics") {
  TEST_CASE("free particle at rest oscillates with the mass") {
    EvolutionParams p;
    p.m = 1.3;
    p.t1 = 2.0;
    Spinor chi = Spinor::Zero();
    chi(0) = 1.0;
    const Trajectory tr = evolve(chi, p);
    CHECK(tr.times.size() == 2001);
    CHECK((tr.spinors.back() - std::exp(cplx(0.0, -p.m * 2.0)) * chi).norm() < 1e-9);
  }

  TEST_CASE("the reduced generator is anti-Hermitian") {
    const EvolutionParams p = coupled();
    for (double t : {0.0, 0.7, 1.9}) {
      const Mat4 g = reduced_generator(p, t);
      CHECK(max_abs(g + g.adjoint()) < 1e-14);
    }
  }

  TEST_CASE("grid validation") {
    EvolutionParams p;
    p.dt = 0.0;
    CHECK_THROWS_AS(time_grid(p), std::invalid_argument);
    p.dt = 1e-2;
    p.t1 = -1.0;
    CHECK_THROWS_AS(time_grid(p), std::invalid_argument);
    p.t1 = 1.0;
    p.m = -1.0;
    CHECK_THROWS_AS(time_grid(p), std::invalid_argument);
    p.m = 0.0;
    p.t1 = std::nan("");
    CHECK_THROWS_AS(time_grid(p), std::invalid_argument);
  }

  TEST_CASE("the printed pseudoscalar term of the I2 law vanishes identically") {
    const Mat4& c5 = special(Special::C5);
    const Mat4& g0 = special(Special::G0);
    for (int k = 0; k < 10; ++k) {
      const Mat4 psi = random_state(2, 300 + k).as_matrix();
      CHECK(std::abs((psi.transpose() * g0 * c5 * psi * c5).trace()) < 1e-14);
    }
  }

  TEST_CASE("derivative laws of I1 and I2 with generic couplings") {
    const StateTensor s = random_state(2, 5);
    for (const char* name : {"I1", "I2"}) {
      const InvariantEvolutionReport rep = invariant_evolution_check(name, s, coupled());
      INFO(name);
      CHECK(rep.rhs_residual < 1e-5);
      CHECK(std::abs(rep.values.front() - eval_named(name, s)) < 1e-14);
    }
    CHECK_THROWS_AS(invariant_evolution_check("T1", s, coupled()), std::invalid_argument);
    CHECK_THROWS_AS(invariant_evolution_check("I1", random_state(3, 0), coupled()), std::invalid_argument);
  }

  TEST_CASE("form laws") {
    const EvolutionParams p = coupled();
    const Trajectory x = evolve(random_spinor(1), p);
    const Trajectory y = evolve(random_spinor(2), p);
    for (FormKind k : {FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05}) {
      CHECK(form_evolution_residual(k, x, y, p) < 1e-5);
    }
  }
}
