#include "spinor_inv/catalog.hpp"
#include "spinor_inv/contraction.hpp"

#include <doctest.h>

using namespace spinv;

namespace {

PatternErrorCode error_of(const char* text) {
  try {
    parse_pattern(text);
  } catch (const PatternError& e) {
    return e.code();
  }
  FAIL("pattern parsed unexpectedly: " << text);
  return PatternErrorCode::Syntax;
}

}  // namespace

TEST_SUITE("contraction") {
  TEST_CASE("the V1 pattern on a basis state is one") {
    const ContractionPattern p = parse_pattern("g0[l i] g0[m j] g0[n k] Psi*[i j k] Psi[l m n]");
    CHECK(p.particles == 3);
    CHECK(p.bidegree() == std::pair<int, int>{1, 1});
    CHECK(std::abs(evaluate(p, basis_state({0, 0, 0})) - 1.0) < 1e-14);
  }

  TEST_CASE("a chain with reversed slots is minus twice I1") {
    // Frozen sign: the closing C contracts Bob's slots in the reversed order.
    const ContractionPattern p = parse_pattern("C[j m] Psi[j k] Psi[m n] C[k n]");
    for (int k = 0; k < 5; ++k) {
      const StateTensor s = random_state(2, 40 + k);
      CHECK(std::abs(evaluate(p, s) + 2.0 * eval_named("I1", s)) < 1e-13);
    }
  }

  TEST_CASE("planner agrees with the naive sum and is cheaper") {
    const ContractionPattern p = parse_pattern("g0[l i] g0[m j] g0[n k] Psi*[i j k] Psi[l m n]");
    const EvaluationPlan ep = plan(p);
    CHECK(ep.flops == 784.0);
    CHECK(ep.naive_flops == 4096.0);
    const StateTensor s = random_state(3, 2);
    CHECK(std::abs(execute(ep, s) - evaluate_naive(p, s)) < 1e-14);
  }

  TEST_CASE("diagnostics") {
    CHECK(error_of("C[i j] Psi[i k] Psi[j k]") == PatternErrorCode::IndexInTwoTensors);
    CHECK(error_of("C[i k] g0[j l] Psi[i j] Psi[k l]") == PatternErrorCode::ParityViolation);
    CHECK(error_of("Q[i k] C[j l] Psi[i j] Psi[k l]") == PatternErrorCode::UnknownAtom);
    CHECK(error_of("C[i] C[j l] Psi[i j] Psi[k l]") == PatternErrorCode::SandwichArity);
    CHECK(error_of("C[i k] C[j l]") == PatternErrorCode::NoTensors);
    CHECK(error_of("C[i l] C[j k] Psi[i j] Psi[k l]") == PatternErrorCode::SlotMismatch);
    CHECK(error_of("C[i k] C[j l] Psi[i j] Psi[k m]") == PatternErrorCode::IndexCount);
    CHECK(error_of("C[i k] C[i l] Psi[i j] Psi[k l]") != PatternErrorCode::Syntax);
    CHECK(error_of("C[i k] C[j l] Psi[i j] Psi[k l") == PatternErrorCode::Syntax);
    try {
      parse_pattern("C[i j] Psi[i k] Psi[j k]");
    } catch (const PatternError& e) {
      CHECK(e.letter() == 'k');
    }
  }

  TEST_CASE("parity counts and observers") {
    const ContractionPattern p = parse_pattern("C5[i k] C[j l] Psi[i j] Psi[k l]");
    CHECK(p.parity_odd_counts() == std::vector<int>{1, 0});
    CHECK(p.bilinear_observers() == std::vector<bool>{true, true});
  }
}
