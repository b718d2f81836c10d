#include <gtest/gtest.h>

#include <stdexcept>

#include "spinweave/sweep.hpp"

using namespace spinweave;

TEST(ParallelMap, KeepsIndexOrder) {
  for (std::size_t workers : {1u, 2u, 7u, 64u}) {
    const auto out = parallel_map(200, [](std::size_t i) { return i * i; }, workers);
    ASSERT_EQ(out.size(), 200u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
  EXPECT_TRUE(parallel_map(0, [](std::size_t i) { return i; }, 4).empty());
}

TEST(ParallelMap, RethrowsWorkerFailure) {
  const auto f = [](std::size_t i) -> int {
    if (i == 13) throw std::runtime_error("point 13");
    return 0;
  };
  for (std::size_t workers : {1u, 4u}) EXPECT_THROW(parallel_map(50, f, workers), std::runtime_error);
}

TEST(ChildSeed, DistinctAndReproducible) {
  EXPECT_EQ(child_seed(42, 0), 42u);
  EXPECT_EQ(child_seed(42, 5), 42u ^ 5u);
  EXPECT_NE(child_seed(42, 1), child_seed(42, 2));
}

TEST(WorkerCount, ReadsEnvironment) {
  setenv("SPINWEAVE_THREADS", "3", 1);
  EXPECT_EQ(worker_count(), 3u);
  setenv("SPINWEAVE_THREADS", "junk", 1);
  EXPECT_GE(worker_count(), 1u);
  unsetenv("SPINWEAVE_THREADS");
  EXPECT_GE(worker_count(), 1u);
}
