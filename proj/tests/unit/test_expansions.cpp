#include "spinor_inv/catalog.hpp"
#include "spinor_inv/expansions.hpp"

#include <doctest.h>

using namespace spinv;

TEST_SUITE("expansions") {
  TEST_CASE("every expansion names a two-particle invariant") {
    CHECK_FALSE(expansion_names().empty());
    for (const auto& n : expansion_names()) {
      CHECK(has_expansion(n));
      CHECK(invariant(n).particles == 2);
    }
    CHECK_FALSE(has_expansion("W1"));
  }

  TEST_CASE("I1 expansion matches the contraction engine") {
    for (int k = 0; k < 10; ++k) {
      const StateTensor s = random_state(2, 100 + k);
      CHECK(relative_difference(expansion_oracle("I1", s), eval_named("I1", s)) < 1e-12);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(expansion_oracle("W1", random_state(2, 0)), std::out_of_range);
    CHECK_THROWS_AS(expansion_oracle("I1", random_state(3, 0)), std::invalid_argument);
  }
}
