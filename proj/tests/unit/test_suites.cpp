#include "spinor_inv/suites.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace spinv;

TEST_SUITE("suites") {
  TEST_CASE("names") {
    CHECK(suite_names().size() == 6);
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  }

  TEST_CASE("algebra suite passes and names are unique") {
    const SuiteReport r = run_suite("algebra");
    CHECK(r.suite == "algebra");
    CHECK(r.passed());
    std::vector<std::string> names;
    for (const auto& c : r.checks) names.push_back(c.name);
    std::sort(names.begin(), names.end());
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
  }

  TEST_CASE("a tolerance override applies to residual checks only") {
    SuiteOptions o;
    o.tol = 1e-300;
    const SuiteReport r = run_suite("algebra", o);
    bool any_residual = false;
    for (const auto& c : r.checks) {
      if (c.tolerance > 0.0) {
        any_residual = true;
        CHECK(c.tolerance == 1e-300);
      }
    }
    CHECK(any_residual);
  }

  TEST_CASE("origin names") {
    CHECK(check_origin_name(CheckOrigin::Printed) == "printed");
    CHECK(check_origin_name(CheckOrigin::Reconciled) == "reconciled");
    CHECK(check_origin_name(CheckOrigin::Derived) == "derived");
  }
}
