#include "spinor_inv/analysis.hpp"
#include "spinor_inv/catalog.hpp"

#include <doctest.h>

#include <algorithm>

using namespace spinv;

TEST_SUITE("analysis") {
  TEST_CASE("index weights") {
    CHECK(index_weight(0) == -1);
    CHECK(index_weight(1) == 1);
    CHECK(index_weight(2) == -1);
    CHECK(index_weight(3) == 1);
    CHECK_THROWS_AS(index_weight(4), std::domain_error);
  }

  TEST_CASE("balancedness of small weight lists") {
    CHECK(is_balanced({{1, 1}, {-1, -1}}));
    CHECK_FALSE(is_balanced({{1, 1}, {1, -1}}));
    CHECK(is_balanced({{1, 0}, {-1, 1}, {0, -1}}));
    CHECK_FALSE(is_balanced({{-1, -1, -1}}));
    CHECK(is_affinely_balanced({{2, 0}, {-1, 0}}));
    CHECK_FALSE(is_affinely_balanced({{1, 1}, {1, -1}}));
    CHECK_THROWS_AS(is_balanced(std::vector<std::vector<int>>{}), std::domain_error);
    CHECK_THROWS_AS(is_balanced({{1, 1}, {1}}), std::domain_error);
  }

  TEST_CASE("verdicts are invariant under permutation and negation") {
    std::vector<std::vector<int>> w{{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}, {-1, -1, -1}};
    const bool b = is_balanced(w);
    CHECK(b);
    std::reverse(w.begin(), w.end());
    CHECK(is_balanced(w) == b);
    for (auto& v : w)
      for (int& x : v) x = -x;
    CHECK(is_balanced(w) == b);
  }

  TEST_CASE("weights of the W-type state") {
    const WeightSystem w = weight_vectors(catalog_state("w3").state);
    CHECK(w.particles == 3);
    CHECK(w.support.size() == w.weights.size());
    CHECK(std::is_sorted(w.support.begin(), w.support.end()));
    CHECK_FALSE(is_balanced(w));
    CHECK_THROWS_AS(weight_vectors(StateTensor::zeros(2)), std::domain_error);
  }

  TEST_CASE("numeric rank") {
    const RankReport r = numeric_rank(family("2p-31"));
    CHECK(r.rank == 20);
    CHECK(std::is_sorted(r.singular_values.rbegin(), r.singular_values.rend()));
    CHECK(numeric_rank({"I1", "I1"}).rank == 1);
    CHECK_THROWS_AS(numeric_rank({"I1", "W1"}), std::invalid_argument);
    CHECK_THROWS_AS(numeric_rank({"I1", "T1"}, 3), std::invalid_argument);
  }

  TEST_CASE("frame sweep never contradicts a balanced state") {
    const FrameSweep f = frame_sweep(catalog_state("epr2").state, 10, 1);
    CHECK(f.frames == 10);
    CHECK(f.unbalanced == 0);
  }
}
