#include "spinor_inv/parallel.hpp"

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

using namespace spinv;

TEST_SUITE("parallel") {
  TEST_CASE("thread count honours the environment") {
    ::setenv("SPINOR_INV_THREADS", "3", 1);
    CHECK(thread_count() == 3);
    ::setenv("SPINOR_INV_THREADS", "0", 1);
    CHECK(thread_count() >= 1);
    ::setenv("SPINOR_INV_THREADS", "abc", 1);
    CHECK(thread_count() >= 1);
    ::unsetenv("SPINOR_INV_THREADS");
    CHECK(thread_count() >= 1);
  }

  TEST_CASE("every index runs exactly once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);
    parallel_for(0, [](std::size_t) { FAIL("no calls expected"); });
  }

  TEST_CASE("exceptions propagate") {
    CHECK_THROWS_AS(parallel_for(50,
                                 [](std::size_t i) {
                                   if (i == 17) throw std::runtime_error("x");
                                 }),
                    std::runtime_error);
  }
}
