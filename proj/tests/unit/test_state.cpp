#include "spinor_inv/state.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace spinv;

TEST_SUITE("state") {
  TEST_CASE("flat order puts the last particle fastest") {
    CHECK(flat_index(std::vector<int>{0, 1}) == 1);
    CHECK(flat_index(std::vector<int>{1, 0}) == 4);
    CHECK(flat_index(std::vector<int>{2, 3, 1}) == 2 * 16 + 3 * 4 + 1);
    CHECK(multi_index(45, 3) == std::vector<int>{2, 3, 1});
    CHECK(tensor_size(3) == 64);
  }

  TEST_CASE("construction validates the coefficient count") {
    CHECK_THROWS_AS(StateTensor(2, std::vector<cplx>(15)), std::invalid_argument);
    CHECK_THROWS_AS(StateTensor(0, {}), std::invalid_argument);
  }

  TEST_CASE("basis and product states") {
    const StateTensor b = basis_state({1, 2});
    CHECK(b[6] == cplx(1.0));
    CHECK(b.norm() == doctest::Approx(1.0));
    Spinor x = Spinor::Zero(), y = Spinor::Zero();
    x(0) = 2.0;
    y(3) = cplx(0.0, 1.0);
    const StateTensor p = product_state({x, y});
    CHECK(p[3] == cplx(0.0, 2.0));
    CHECK(p.norm() == doctest::Approx(2.0));
  }

  TEST_CASE("matrix view and swap") {
    const StateTensor s = random_state(2, 5);
    CHECK(max_distance(StateTensor::from_matrix(s.as_matrix()), s) == 0.0);
    CHECK(max_distance(StateTensor::from_matrix(s.as_matrix().transpose()), s.swapped(0, 1)) == 0.0);
    CHECK(max_distance(s.swapped(0, 1).swapped(0, 1), s) == 0.0);
  }

  TEST_CASE("random states are normalized and deterministic") {
    const StateTensor a = random_state(3, 9);
    CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_distance(a, random_state(3, 9)) == 0.0);
    CHECK(max_distance(a, random_state(3, 10)) > 0.0);
  }

  TEST_CASE("local operations on different particles commute") {
    const StateTensor s = random_state(3, 4);
    const Mat4 m = random_state(2, 1).as_matrix();
    const Mat4 n = random_state(2, 2).as_matrix();
    const StateTensor ab = apply_local(apply_local(s, 0, m), 2, n);
    const StateTensor ba = apply_local(apply_local(s, 2, n), 0, m);
    CHECK(max_distance(ab, ba) < 1e-12);
  }

  TEST_CASE("projection annihilates the complementary block") {
    const StateTensor s = random_state(2, 3);
    const StateTensor p = project_local(project_local(s, 0, Projector::Pplus), 0, Projector::Pminus);
    CHECK(p.norm() < 1e-15);
  }

  TEST_CASE("catalog") {
    CHECK(catalog_names().size() == 18);
    const CatalogEntry& w = catalog_state("w3");
    CHECK(w.state.particles() == 3);
    CHECK(w.state.norm() == doctest::Approx(1.0));
    CHECK_THROWS_AS(catalog_state("nope"), std::out_of_range);
    for (const auto& n : catalog_names()) CHECK(catalog_state(n).state.norm() == doctest::Approx(1.0));
  }
}
