#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fillset/constructions.hpp"
#include "fillset/json_io.hpp"
#include "fillset/surgery.hpp"

using namespace fillset;

TEST_CASE("restrict: two families of the k=1 triple") {
  // Dropping the diagonal class merges the three disks into one; the two
  // dissolved crossings are spent on the gluing.
  auto arr = torus_k1_fill(3);
  auto sub = restrict_to(arr, {0, 1});
  REQUIRE(sub.curves.size() == 2);
  REQUIRE(sub.crossings.size() == 1);
  REQUIRE(sub.regions.size() == 1);
  REQUIRE(sub.regions.front().chi == 1);
  REQUIRE(sub.regions.front().punctures == 3);
  REQUIRE(validate_arrangement(sub).empty());
}

TEST_CASE("restrict: full subset is the identity") {
  auto arr = torus_k1_fill(3);
  auto same = restrict_to(arr, {0, 1, 2});
  REQUIRE(arrangement_to_json(same) == arrangement_to_json(arr));
}

TEST_CASE("restrict: single curve of the 4-punctured sphere pair") {
  auto arr = sphere_fill(4, 2);
  auto sub = restrict_to(arr, {0});
  REQUIRE(sub.curves.size() == 1);
  REQUIRE(sub.curves.front().empty());  // marker curve
  REQUIRE(sub.crossings.empty());
  REQUIRE(sub.regions.size() == 2);
  for (const auto& r : sub.regions) {
    REQUIRE(r.chi == 1);
    REQUIRE(r.punctures == 2);
  }
}

TEST_CASE("restrict: argument errors") {
  auto arr = sphere_fill(4, 2);
  REQUIRE_THROWS_AS(restrict_to(arr, std::set<int>{}), std::invalid_argument);
  REQUIRE_THROWS_AS(restrict_to(arr, {5}), std::invalid_argument);
}

TEST_CASE("restrict preserves punctures and the Euler identity on random subsets") {
  std::mt19937 rng(20240917);
  std::vector<Arrangement> pool = {sphere_fill(9, 2), sphere_fill(6, 4), torus_fill(7, 2),
                                   torus_k1_fill(12), ngon_arrangement(7).arrangement};
  for (const auto& arr : pool) {
    const int n_curves = static_cast<int>(arr.curves.size());
    for (int trial = 0; trial < 12; ++trial) {
      std::set<int> keep;
      std::uniform_int_distribution<int> size_dist(1, n_curves);
      std::uniform_int_distribution<int> pick(0, n_curves - 1);
      int target = size_dist(rng);
      while (static_cast<int>(keep.size()) < target) keep.insert(pick(rng));
      auto sub = restrict_to(arr, keep);
      CAPTURE(n_curves, keep.size());
      REQUIRE(validate_arrangement(sub).empty());
      int punct = 0, sum_chi = 0;
      for (const auto& r : sub.regions) {
        punct += r.punctures;
        sum_chi += r.chi;
      }
      REQUIRE(punct == arr.surface.punctures);
      REQUIRE(sub.vertex_count() - sub.edge_count() + sum_chi == 2 - 2 * sub.surface.genus);
    }
  }
}

TEST_CASE("restrict is transitive-consistent") {
  // Restricting in two steps lands on the same sub-arrangement as one step.
  auto arr = torus_k1_fill(8);  // families (2,2,1)
  auto one_step = restrict_to(arr, {0, 2});
  auto two_step = restrict_to(restrict_to(arr, {0, 2, 3}), {0, 1});
  REQUIRE(arrangement_to_json(one_step) == arrangement_to_json(two_step));
}

TEST_CASE("bigon removal cancels exactly two crossings per step and terminates") {
  auto arr = sphere_fill(4, 2);
  arr.regions[0].punctures = 0;
  arr.regions[1].punctures = 2;
  arr.regions[2].punctures = 2;
  arr.regions[3].punctures = 0;
  REQUIRE(validate_arrangement(arr).empty());

  Topology topo = analyze(arr);
  auto bigon = find_empty_bigon(arr, topo);
  REQUIRE(bigon.has_value());
  auto after = remove_bigon(arr, *bigon);
  REQUIRE(after.crossings.size() == arr.crossings.size() - 2);
  REQUIRE(validate_arrangement(after).empty());

  int steps = 0;
  auto reduced = reduce_bigons(arr, &steps);
  REQUIRE(steps <= static_cast<int>(arr.crossings.size()) / 2);
  REQUIRE(reduced.crossings.empty());
  Topology reduced_topo = analyze(reduced);
  REQUIRE_FALSE(find_empty_bigon(reduced, reduced_topo).has_value());
}

TEST_CASE("punctured bigons do not reduce") {
  auto arr = sphere_fill(4, 2);  // every face punctured
  Topology topo = analyze(arr);
  REQUIRE_FALSE(find_empty_bigon(arr, topo).has_value());
}
