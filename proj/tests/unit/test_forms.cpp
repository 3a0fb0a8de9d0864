#include "spinor_inv/forms.hpp"
#include "spinor_inv/state.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace spinv;

namespace {

Spinor basis(int k) {
  Spinor s = Spinor::Zero();
  s(k) = 1.0;
  return s;
}

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("C form between basis spinors reads the entry of C") {
    CHECK(std::abs(form(FormKind::C, basis(0), basis(1)) - cplx(0.0, 1.0)) < kConstTol);
    CHECK(std::abs(form(FormKind::C, basis(1), basis(0)) + form(FormKind::C, basis(0), basis(1))) < kConstTol);
  }

  TEST_CASE("bilinear forms vanish on the diagonal") {
    const Spinor psi = random_spinor(11);
    CHECK(std::abs(form(FormKind::C, psi, psi)) < kConstTol);
    CHECK(std::abs(form(FormKind::C5, psi, psi)) < kConstTol);
  }

  TEST_CASE("sesquilinear forms") {
    CHECK(std::abs(form(FormKind::G0, basis(0), basis(0)) - 1.0) < kConstTol);
    CHECK(std::abs(form(FormKind::G0, basis(2), basis(2)) + 1.0) < kConstTol);
    const Spinor a = random_spinor(1);
    const Spinor b = random_spinor(2);
    CHECK(std::abs(form(FormKind::G0, a, b) - std::conj(form(FormKind::G0, b, a))) < kConstTol);
    CHECK(std::abs(form(FormKind::G05, a, a).real()) < kConstTol * a.squaredNorm());
  }

  TEST_CASE("form names round trip") {
    for (FormKind k : {FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05}) {
      CHECK(parse_form_kind(form_kind_name(k)) == k);
    }
    CHECK_THROWS_AS(parse_form_kind("G7"), std::invalid_argument);
  }

  TEST_CASE("invariance algebra dimensions") {
    CHECK(invariance_algebra_dimension({}) == 32);
    CHECK(invariance_algebra_dimension({FormKind::C}) == 20);
    CHECK(invariance_algebra_dimension({FormKind::C5}) == 20);
    CHECK(invariance_algebra_dimension({FormKind::G0}) == 16);
    CHECK(invariance_algebra_dimension({FormKind::G05}) == 16);
    CHECK(invariance_algebra_dimension({FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05}) == 6);
    // Frozen: the two bilinear forms together keep the complexified Lorentz
    // algebra, 6 complex dimensions.
    CHECK(invariance_algebra_dimension({FormKind::C, FormKind::C5}) == 12);
  }

  TEST_CASE("infinitesimal defect and real rank") {
    const Mat4 s12 = gamma(1) * gamma(2);
    CHECK(infinitesimal_defect(FormKind::G0, s12) < kConstTol);
    CHECK(infinitesimal_defect(FormKind::G0, gamma(0)) > 1.0);
    const cplx i(0.0, 1.0);
    CHECK(real_rank({s12, 2.0 * s12}) == 1);
    CHECK(real_rank({s12, i * s12}) == 2);
    CHECK(real_rank({}) == 0);
  }
}
