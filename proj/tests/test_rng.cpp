#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "exactrank/rng.hpp"

using namespace exactrank;

TEST_CASE("identical seeds replay identical sequences") {
  rng_stream a(42), b(42);
  for (int k = 0; k < 1000; ++k) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive_stream separates any path coordinate") {
  auto base = derive_stream(7, rng_phase::trial, {1, 10, 0});
  std::vector<rng_stream> variants = {
      derive_stream(8, rng_phase::trial, {1, 10, 0}),
      derive_stream(7, rng_phase::instance, {1, 10, 0}),
      derive_stream(7, rng_phase::trial, {2, 10, 0}),
      derive_stream(7, rng_phase::trial, {1, 11, 0}),
      derive_stream(7, rng_phase::trial, {1, 10, 1}),
  };
  const std::uint64_t first = base.next_u64();
  std::set<std::uint64_t> seen{first};
  for (auto& v : variants) {
    const std::uint64_t x = v.next_u64();
    CHECK(x != first);
    seen.insert(x);
  }
  CHECK(seen.size() == variants.size() + 1);

  auto replay = derive_stream(7, rng_phase::trial, {1, 10, 0});
  CHECK(replay.next_u64() == first);
}

TEST_CASE("next_double lands in [0,1) with mean near 1/2") {
  rng_stream rng(123);
  const int n = 200000;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    double u = rng.next_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // sigma of the mean is 1/sqrt(12 n) ~ 6.5e-4; allow 5 sigma.
  CHECK(std::abs(sum / n - 0.5) < 5.0 / std::sqrt(12.0 * n));
}

TEST_CASE("next_below is bounded and roughly uniform") {
  rng_stream rng(99);
  const std::uint64_t bound = 7;
  std::vector<int> counts(bound, 0);
  const int n = 70000;
  for (int k = 0; k < n; ++k) {
    std::uint64_t v = rng.next_below(bound);
    REQUIRE(v < bound);
    counts[v] += 1;
  }
  for (std::uint64_t v = 0; v < bound; ++v) {
    double expected = static_cast<double>(n) / bound;
    CHECK(std::abs(counts[v] - expected) < 5.0 * std::sqrt(expected));
  }
}

TEST_CASE("uniform(lo,hi) stays inside the interval") {
  rng_stream rng(5);
  for (int k = 0; k < 10000; ++k) {
    double v = rng.uniform(0.58, 0.65);
    REQUIRE(v >= 0.58);
    REQUIRE(v < 0.65);
  }
}
