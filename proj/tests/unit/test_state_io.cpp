#include "spinor_inv/state_io.hpp"

#include <doctest.h>

#include <string>

using namespace spinv;

TEST_SUITE("state_io") {
  TEST_CASE("round trip") {
    const StateTensor s = random_state(2, 12);
    const StateTensor t = parse_state_json(state_to_json(s, "x"));
    CHECK(max_distance(s, t) == 0.0);
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      parse_state_json("{\n  \"particles\": 1,\n  \"coefficients\": [[1, 0] [0, 0]]\n}");
      FAIL("expected a StateFormatError");
    } catch (const StateFormatError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 1);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("schema violations") {
    CHECK_THROWS_AS(parse_state_json("[]"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json("{\"particles\": 1}"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json("{\"particles\": 1, \"coefficients\": [[1,0]]}"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json("{\"particles\": 1, \"coefficients\": [1,2,3,4]}"), StateFormatError);
    CHECK_THROWS_AS(read_state_file("/nonexistent/state.json"), StateFormatError);
  }

  TEST_CASE("shipped fixtures match the catalog") {
    for (const auto& n : catalog_names()) {
      const StateTensor s = read_state_file(std::string(SPINOR_INV_DATA_DIR) + "/" + n + ".json");
      CHECK(max_distance(s, catalog_state(n).state) == 0.0);
    }
  }
}
