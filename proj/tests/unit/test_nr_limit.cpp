#include "spinor_inv/nr_limit.hpp"

#include <doctest.h>

#include <cmath>

using namespace spinv;

namespace {

QubitTensor ghz() {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<cplx> c(8, 0.0);
  c[0] = h;
  c[7] = h;
  return {3, c};
}

QubitTensor w_state() {
  const double h = 1.0 / std::sqrt(3.0);
  std::vector<cplx> c(8, 0.0);
  c[1] = h;
  c[2] = h;
  c[4] = h;
  return {3, c};
}

}  // namespace

TEST_SUITE("nr_limit") {
  TEST_CASE("concurrence of a Bell pair") {
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(wootters_concurrence(QubitTensor(2, {h, 0.0, 0.0, h})) - 0.5) < 1e-15);
    CHECK(std::abs(wootters_concurrence(QubitTensor(2, {1.0, 0.0, 0.0, 0.0}))) == 0.0);
  }

  TEST_CASE("GHZ values") {
    const QubitTensor g = ghz();
    CHECK(std::abs(kempe_J(1, g) - 1.0) < 1e-14);
    for (int k = 2; k <= 4; ++k) CHECK(std::abs(kempe_J(k, g) - 0.5) < 1e-14);
    CHECK(std::abs(kempe_J(5, g) - 0.25) < 1e-14);
    CHECK(std::abs(s2(g)) < 1e-14);
  }

  TEST_CASE("W values") {
    const QubitTensor w = w_state();
    for (int k = 2; k <= 4; ++k) CHECK(std::abs(kempe_J(k, w) - 5.0 / 9.0) < 1e-14);
    CHECK(std::abs(kempe_J(5, w) - 2.0 / 9.0) < 1e-14);
    CHECK(std::abs(s2(w)) < 1e-14);
  }

  TEST_CASE("J polynomials are symmetric under qubit relabeling in total") {
    const QubitTensor t = random_qubits(3, 7);
    std::vector<cplx> c(8);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) c[static_cast<std::size_t>(b * 4 + a * 2 + d)] = t.at(a, b, d);
    const QubitTensor swapped(3, c);
    CHECK(std::abs(kempe_J(2, t) - kempe_J(3, swapped)) < 1e-13);
    CHECK(std::abs(kempe_J(5, t) - kempe_J(5, swapped)) < 1e-13);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(QubitTensor(2, std::vector<cplx>(3)), std::invalid_argument);
    CHECK_THROWS_AS(random_qubits(0, 1), std::domain_error);
    CHECK_THROWS_AS(kempe_J(6, ghz()), std::invalid_argument);
    CHECK_THROWS_AS(wootters_concurrence(ghz()), std::invalid_argument);
    CHECK_THROWS_AS(s2(random_qubits(2, 1)), std::invalid_argument);
  }
}
