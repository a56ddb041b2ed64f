#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "ais/random.hpp"

using ais::RandomStream;

TEST_CASE("same key reproduces the same draw sequence") {
  RandomStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  RandomStream c(42, 7), d(42, 7);
  for (int i = 0; i < 100; ++i) {
    CHECK(c.uniform() == d.uniform());
    CHECK(c.normal() == d.normal());
  }
}

TEST_CASE("different stream ids give different sequences") {
  RandomStream a(42, 0), b(42, 1), c(43, 0);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 64; ++i) {
    const auto va = a.next_u64();
    if (va == b.next_u64()) ++same_ab;
    if (va == c.next_u64()) ++same_ac;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("substreams differ from the parent and from each other") {
  RandomStream parent(5, 3);
  auto s0 = parent.substream(0);
  auto s1 = parent.substream(1);
  auto s0b = RandomStream(5, 3).substream(0);
  CHECK(s0.next_u64() == s0b.next_u64());
  std::set<std::uint64_t> firsts;
  firsts.insert(RandomStream(5, 3).next_u64());
  firsts.insert(ais::RandomStream(5, 3).substream(0).next_u64());
  firsts.insert(s1.next_u64());
  firsts.insert(parent.substream(2).next_u64());
  CHECK(firsts.size() == 4);
}

TEST_CASE("uniform stays in [0,1) and has the right mean") {
  RandomStream rng(1, 0);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("uniform_index covers the full range uniformly") {
  RandomStream rng(9, 2);
  const std::size_t n = 7;
  std::vector<int> counts(n, 0);
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const std::size_t k = rng.uniform_index(n);
    REQUIRE(k < n);
    ++counts[k];
  }
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(std::abs(counts[k] - draws / static_cast<int>(n)) < 500);
  }
}

TEST_CASE("normal has standard moments") {
  RandomStream rng(12, 1);
  const int n = 400000;
  double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    m1 += z;
    m2 += z * z;
    m3 += z * z * z;
    m4 += z * z * z * z;
  }
  m1 /= n; m2 /= n; m3 /= n; m4 /= n;
  CHECK(std::abs(m1) < 0.01);
  CHECK(std::abs(m2 - 1.0) < 0.02);
  CHECK(std::abs(m3) < 0.05);
  CHECK(std::abs(m4 - 3.0) < 0.1);
}
