#include "spinor_inv/catalog.hpp"
#include "spinor_inv/expansions.hpp"

#include <doctest.h>

#include <string>

using namespace spinv;

namespace {

void check_value(const char* state, const char* name, cplx want) {
  INFO(state << " " << name);
  CHECK(std::abs(eval_named(name, catalog_state(state).state) - want) < 1e-12);
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("name counts") {
    CHECK(list_names(2).size() == 55);
    CHECK(list_names(3).size() == 63);
    CHECK(all_invariant_names().size() == 118);
    CHECK(is_known_invariant("I1"));
    CHECK_FALSE(is_known_invariant("I9"));
    for (const auto& n : list_names(2, std::pair<int, int>{2, 0})) CHECK(invariant(n).bidegree == std::pair<int, int>{2, 0});
  }

  TEST_CASE("unknown names list the valid ones") {
    try {
      invariant("Nope");
      FAIL("expected UnknownInvariant");
    } catch (const UnknownInvariant& e) {
      CHECK(e.name() == "Nope");
      CHECK(std::string(e.what()).find("I1") != std::string::npos);
    }
  }

  TEST_CASE("families") {
    CHECK(family("2p-22").size() == 27);
    CHECK(family("2p-31").size() == 20);
    CHECK(family("3p-22-selected").size() == 21);
    CHECK(family("3p-31").size() == 32);
    CHECK(family_ids().size() == 4);
    CHECK_THROWS_AS(family("4p"), std::out_of_range);
  }

  TEST_CASE("frozen values on catalog states") {
    const cplx i(0.0, 1.0);
    check_value("epr2", "I1", 0.5 * i);
    check_value("epr2", "T1", -0.5);
    check_value("epr2", "R1", 0.25);
    check_value("epr2", "R4", 0.25);
    check_value("xccx", "R1", -0.25);
    check_value("xccx", "T1", 0.5);
    check_value("req1", "B1", 0.125 * i);
    check_value("req1", "Z1", 0.125 * i);
    check_value("req1", "D1", 0.125 * i);
    check_value("req1", "W1", 0.0625);
    check_value("xccx6", "T1", -4.0 / 9.0);
    check_value("xccx6", "T2", -2.0 * i / 9.0);
    check_value("xccx6", "N1N4mN2N3", -2.0 / 3.0);
    CHECK(std::abs(std::abs(eval_named("W1", catalog_state("w3").state)) - 4.0 / 27.0) < 1e-12);
  }

  TEST_CASE("evaluator validates the particle count") {
    const StateTensor s = random_state(3, 1);
    Evaluator ev(s);
    CHECK_THROWS_AS(ev("I1"), std::invalid_argument);
    CHECK_THROWS_AS(ev("Nope"), UnknownInvariant);
    CHECK(ev("W1") == eval_named("W1", s));
  }

  TEST_CASE("relative difference") {
    CHECK(relative_difference(0.0, 0.0) == 0.0);
    CHECK(relative_difference(1.0, 0.5) == doctest::Approx(0.5));
    CHECK(relative_difference(cplx(0.0, 2.0), cplx(0.0, 2.0)) == 0.0);
  }

  TEST_CASE("reconciled dependencies hold and printed ones are recorded") {
    CHECK(printed_dependencies().size() == 12);
    CHECK(reconciled_dependencies().size() == 12);
    for (double r : dependency_residuals(reconciled_dependencies(), 10, 3)) CHECK(r < 1e-10);
  }

  TEST_CASE("single-form names reject the alternate-form residual") {
    int single = 0;
    for (const auto& n : list_names(2)) {
      if (!invariant(n).alt_forms.empty() || has_expansion(n)) continue;
      ++single;
      CHECK_THROWS_AS(alt_forms_residual(n, random_state(2, 0)), std::invalid_argument);
    }
    CHECK(single > 0);
  }
}
