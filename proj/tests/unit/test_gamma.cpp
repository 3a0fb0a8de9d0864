#include "spinor_inv/gamma.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace spinv;

TEST_SUITE("gamma") {
  TEST_CASE("C is block diagonal minus sigma2 and its own inverse") {
    const Mat4& c = special(Special::C);
    const cplx i(0.0, 1.0);
    Mat4 want = Mat4::Zero();
    // -sigma2 = [[0, i], [-i, 0]] in both diagonal blocks.
    want(0, 1) = i;
    want(1, 0) = -i;
    want(2, 3) = i;
    want(3, 2) = -i;
    CHECK(max_abs(c - want) < kConstTol);
    CHECK(max_abs(c * c - Mat4::Identity()) < kConstTol);
  }

  TEST_CASE("derived sandwich matrices are products of the printed ones") {
    CHECK(max_abs(special(Special::C5) - special(Special::C) * special(Special::G5)) < kConstTol);
    CHECK(max_abs(special(Special::G05) - gamma(0) * special(Special::G5)) < kConstTol);
    const cplx i(0.0, 1.0);
    CHECK(max_abs(special(Special::G5) - i * gamma(0) * gamma(1) * gamma(2) * gamma(3)) < kConstTol);
  }

  TEST_CASE("gamma0 is diag(1,1,-1,-1) and the metric is mostly minus") {
    Mat4 want = Mat4::Zero();
    want.diagonal() << 1.0, 1.0, -1.0, -1.0;
    CHECK(max_abs(gamma(0) - want) < kConstTol);
    CHECK(metric(0, 0) == 1.0);
    CHECK(metric(2, 2) == -1.0);
    CHECK(metric(1, 3) == 0.0);
  }

  TEST_CASE("projectors") {
    Mat4 pp = Mat4::Zero();
    pp.diagonal() << 1.0, 1.0, 0.0, 0.0;
    CHECK(max_abs(projector(Projector::Pplus) - pp) < kConstTol);
    CHECK(max_abs(projector(Projector::PL) * projector(Projector::PR)) < kConstTol);
    CHECK(max_abs(projector(Projector::Pplus) * special(Special::C5) * projector(Projector::Pplus)) < kConstTol);
    CHECK(max_abs(projector(Projector::PL) * gamma(0) * projector(Projector::PL)) < kConstTol);
  }

  TEST_CASE("name parsing") {
    CHECK(parse_special("C5") == Special::C5);
    CHECK(parse_projector("PL") == Projector::PL);
    CHECK_THROWS_AS(parse_special("C7"), std::invalid_argument);
    CHECK_THROWS(gamma(4));
  }
}
