#include <catch2/catch_amalgamated.hpp>

#include "fillset/oracle.hpp"

using namespace fillset;

TEST_CASE("slope canonicalization") {
  REQUIRE(make_slope(-1, 2) == Slope{1, -2});
  REQUIRE(make_slope(0, -1) == Slope{0, 1});
  REQUIRE(make_slope(3, -5) == Slope{3, -5});
  REQUIRE_THROWS_AS(make_slope(2, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(make_slope(0, 0), std::invalid_argument);
}

TEST_CASE("slope intersections") {
  REQUIRE(slope_intersection(Slope{1, 0}, Slope{0, 1}) == 1);
  REQUIRE(slope_intersection(Slope{1, 0}, Slope{1, 1}) == 1);
  REQUIRE(slope_intersection(Slope{1, 0}, Slope{1, 2}) == 2);
  REQUIRE(slope_intersection(Slope{1, 2}, Slope{1, 2}) == 0);
}

TEST_CASE("maximum 1-system of slopes has three classes") {
  for (int bound = 2; bound <= 8; ++bound) {
    auto result = torus_max_ksystem(1, bound);
    CAPTURE(bound);
    REQUIRE(result.size == 3);
    REQUIRE(result.witness.size() == 3);
    for (size_t i = 0; i < result.witness.size(); ++i)
      for (size_t j = i + 1; j < result.witness.size(); ++j)
        REQUIRE(slope_intersection(result.witness[i], result.witness[j]) <= 1);
  }
}

TEST_CASE("k-system extremes") {
  REQUIRE(torus_max_ksystem(0, 5).size == 1);  // distinct classes always intersect
  auto b3 = torus_max_ksystem(2, 3);
  auto b4 = torus_max_ksystem(2, 4);
  REQUIRE(b3.size == b4.size);  // stable from B = 3 on
  REQUIRE(b3.size >= 3);
}

TEST_CASE("k-system size is monotone in k and B") {
  int prev_k = 0;
  for (int k = 0; k <= 3; ++k) {
    auto r = torus_max_ksystem(k, 4);
    REQUIRE(r.size >= prev_k);
    prev_k = r.size;
  }
  int prev_b = 0;
  for (int bound = 1; bound <= 6; ++bound) {
    auto r = torus_max_ksystem(1, bound);
    REQUIRE(r.size >= prev_b);
    prev_b = r.size;
  }
}

TEST_CASE("brute partition maximum") {
  auto r = brute_partition_max(6, 3, 1);
  REQUIRE(r.value == 12);
  REQUIRE(r.witness == std::vector<std::int64_t>{2, 2, 2});

  auto r2 = brute_partition_max(4, 2, 3);
  REQUIRE(r2.value == 16);
  REQUIRE(r2.witness == std::vector<std::int64_t>{2, 2});

  // Single family: no cross terms, (k-1) C(N,2).
  for (int n : {1, 4, 9})
    for (int k : {1, 3}) {
      auto single = brute_partition_max(n, 1, k);
      REQUIRE(single.value == static_cast<std::int64_t>(k - 1) * n * (n - 1) / 2);
    }

  REQUIRE_THROWS_AS(brute_partition_max(41, 3, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(brute_partition_max(10, 7, 1), std::invalid_argument);
}

TEST_CASE("brute_min_n examples") {
  REQUIRE(brute_min_n(Formula::EvenLower, {SurfaceSig{0, 4}, 2, 0}) == 2);
  REQUIRE(brute_min_n(Formula::TorusK1, {SurfaceSig{1, 7}, 1, 0}) == 5);
  REQUIRE(brute_min_n(Formula::OddLower, {SurfaceSig{1, 12}, 1, 3}) == 6);
  REQUIRE_THROWS_AS(brute_min_n(Formula::GenusWindow, {SurfaceSig{2, 2}, 2, 0}), std::invalid_argument);
}

TEST_CASE("brute_min_n agrees with the closed forms on a grid") {
  for (int g = 0; g <= 3; ++g)
    for (int n = 1; n <= 50; ++n) {
      SurfaceSig sig{g, n};
      for (int k : {2, 4}) {
        if (euler_char(sig) >= 0) continue;
        REQUIRE(brute_min_n(Formula::EvenLower, {sig, k, 0}) == min_filling_even(sig, k).minimal_n);
      }
      if (g >= 1)
        for (int k : {1, 3})
          for (int m_cap : {3, 6, 12})
            REQUIRE(brute_min_n(Formula::OddLower, {sig, k, m_cap}) ==
                    min_filling_odd(sig, k, m_cap).minimal_n);
      if (g == 1) REQUIRE(brute_min_n(Formula::TorusK1, {sig, 1, 0}) == torus_k1_bound(n).minimal_n);
    }
}
