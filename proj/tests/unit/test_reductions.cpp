#include "spinor_inv/catalog.hpp"
#include "spinor_inv/reductions.hpp"

#include <doctest.h>

using namespace spinv;

namespace {

cplx fitted(const char* name, const std::vector<Block>& blocks) {
  const auto reps = reduce_energy_subspace(name, blocks);
  REQUIRE_FALSE(reps.empty());
  return reps.front().constant;
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("block names") {
    for (Block b : {Block::Plus, Block::Minus, Block::Left, Block::Right}) CHECK(parse_block(block_name(b)) == b);
    CHECK_THROWS_AS(parse_block("X"), std::invalid_argument);
  }

  TEST_CASE("embedding places amplitudes in the chosen block") {
    const QubitTensor q(1, {1.0, 0.0});
    CHECK(embed_qubits(q, {Block::Plus})[0] == cplx(1.0));
    CHECK(embed_qubits(q, {Block::Minus})[2] == cplx(1.0));
    const StateTensor l = embed_qubits(q, {Block::Left});
    CHECK(l[0] == cplx(1.0));
    CHECK(l[2] == cplx(-1.0));
    CHECK_THROWS_AS(embed_qubits(q, {Block::Plus, Block::Plus}), std::invalid_argument);
  }

  TEST_CASE("frozen reduction constants on the upper block") {
    CHECK(std::abs(fitted("T1", {Block::Plus, Block::Plus}) - cplx(-1.0)) < 1e-9);
    CHECK(std::abs(fitted("I1", {Block::Plus, Block::Plus}) - cplx(1.0)) < 1e-9);
    CHECK(std::abs(fitted("W1", {Block::Plus, Block::Plus, Block::Plus}) - cplx(-1.0)) < 1e-9);
    CHECK(std::abs(fitted("K1", {Block::Plus, Block::Plus, Block::Plus}) - cplx(1.0)) < 1e-9);
  }

  TEST_CASE("reconciled targets pass wherever a printed target is replaced") {
    for (int n : {2, 3}) {
      for (const auto& name : reducible_names(n)) {
        const std::vector<Block> blocks(static_cast<std::size_t>(n), Block::Minus);
        for (const auto& rep : reduce_energy_subspace(name, blocks)) {
          if (rep.status == FormStatus::Reconciled) {
            INFO(name << " -> " << rep.target);
            CHECK(rep.passed);
          }
        }
      }
    }
  }

  TEST_CASE("chirality-projected states annihilate the Weyl-null names") {
    CHECK(weyl_null_names(2).size() == 15);
    CHECK(weyl_null_names(3).size() == 55);
    for (const auto& name : weyl_null_names(2)) {
      INFO(name);
      CHECK(reduce(name, {Block::Left, Block::Left}, nullptr).passed);
      CHECK(reduce(name, {Block::Right, Block::Right}, nullptr).passed);
    }
  }
}
