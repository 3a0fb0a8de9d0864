#include "spinor_inv/forms.hpp"
#include "spinor_inv/lorentz.hpp"
#include "spinor_inv/state.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace spinv;

TEST_SUITE("lorentz") {
  TEST_CASE("generators are quarter commutators") {
    for (const auto& p : kGeneratorPairs) {
      const Mat4 want = 0.25 * (gamma(p[0]) * gamma(p[1]) - gamma(p[1]) * gamma(p[0]));
      CHECK(max_abs(generator(p[0], p[1]) - want) < kConstTol);
    }
  }

  TEST_CASE("exponential of the zero element is the identity") {
    CHECK(max_abs(exp_element(LieAlgebraElement{}) - Mat4::Identity()) < kConstTol);
  }

  TEST_CASE("a pure rotation by 2 pi is minus the identity") {
    LieAlgebraElement a;
    a.omega[3] = 2.0 * 3.14159265358979323846;  // S^{12}
    CHECK(max_abs(exp_element(a) + Mat4::Identity()) < 1e-12);
  }

  TEST_CASE("sampling is deterministic and bounded") {
    CHECK(max_abs(random_proper_orthochronous(7) - random_proper_orthochronous(7)) == 0.0);
    CHECK(max_abs(random_proper_orthochronous(7) - random_proper_orthochronous(8)) > 0.0);
    const LieAlgebraElement a = random_element(3, 0.5);
    for (double w : a.omega) CHECK(std::abs(w) <= 0.5);
    CHECK_THROWS_AS(random_element(1, 4.0), std::domain_error);
    CHECK_THROWS_AS(random_element(1, 0.0), std::domain_error);
  }

  TEST_CASE("sampled transformations preserve the four form matrices") {
    for (int k = 0; k < 20; ++k) {
      const Mat4 s = random_proper_orthochronous(100 + k, kMaxSampleScale);
      CHECK(max_abs(s.transpose() * form_matrix(FormKind::C) * s - form_matrix(FormKind::C)) < 1e-9);
      CHECK(max_abs(s.adjoint() * form_matrix(FormKind::G05) * s - form_matrix(FormKind::G05)) < 1e-9);
    }
  }

  TEST_CASE("discrete maps") {
    const cplx i(0.0, 1.0);
    CHECK(max_abs(discrete(Discrete::P) - gamma(0)) < kConstTol);
    CHECK(max_abs(discrete(Discrete::CPT) + i * special(Special::G5)) < kConstTol);
    CHECK(parse_discrete("CT") == Discrete::CT);
  }

  TEST_CASE("antiunitary maps square to a sign") {
    // Frozen: T and CP square to -1, charge conjugation to +1.
    const Spinor psi = random_spinor(3);
    auto twice = [&](Antiunitary a) { return apply_antiunitary(a, apply_antiunitary(a, psi)); };
    CHECK((twice(Antiunitary::T) + psi).norm() < 1e-12);
    CHECK((twice(Antiunitary::Cconj) - psi).norm() < 1e-12);
    CHECK((twice(Antiunitary::CP) + psi).norm() < 1e-12);
  }
}
