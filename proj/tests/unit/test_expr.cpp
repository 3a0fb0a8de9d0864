#include "spinor_inv/expr.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace spinv;

TEST_SUITE("expr") {
  TEST_CASE("trace conversion matches the direct matrix trace") {
    const Expr e = Expr::trace("PT C P C");
    const StateTensor s = random_state(2, 8);
    const Mat4 psi = s.as_matrix();
    const Mat4& c = special(Special::C);
    const cplx want = (psi.transpose() * c * psi * c).trace();
    CHECK(std::abs(e.eval(s, {}) - want) < 1e-14);
    CHECK_THROWS_AS(trace_to_pattern("PT X P C"), std::invalid_argument);
  }

  TEST_CASE("arithmetic and bidegree") {
    const Expr a = Expr::trace("PT C P C");
    const Expr n = Expr::trace("PT g0 Ps g0");
    const StateTensor s = random_state(2, 9);
    const cplx va = a.eval(s, {});
    const cplx vn = n.eval(s, {});
    CHECK(std::abs((a * n).eval(s, {}) - va * vn) < 1e-14);
    CHECK(std::abs(a.abs2().eval(s, {}) - std::norm(va)) < 1e-14);
    CHECK(std::abs((a - a).eval(s, {})) < 1e-15);
    CHECK((a * n).bidegree({}) == std::pair<int, int>{3, 1});
    CHECK(a.conj().bidegree({}) == std::pair<int, int>{0, 2});
    CHECK_THROWS_AS((a + n).bidegree({}), std::logic_error);
  }

  TEST_CASE("single pattern detection") {
    const Expr a = Expr::trace("PT C P C");
    CHECK(a.single_pattern() != nullptr);
    CHECK((cplx(0.5) * a).single_pattern() != nullptr);
    CHECK((a * a).single_pattern() == nullptr);
    CHECK(Expr().single_pattern() == nullptr);
  }

  TEST_CASE("named references resolve through the callback") {
    const Expr e = Expr::named("X") * Expr::constant(2.0);
    const StateTensor s = random_state(2, 1);
    CHECK(std::abs(e.eval(s, [](const std::string&) { return cplx(0.0, 3.0); }) - cplx(0.0, 6.0)) < 1e-15);
  }
}
