#include <catch2/catch_amalgamated.hpp>

#include "fillset/constructions.hpp"
#include "fillset/homotopy.hpp"

using namespace fillset;

namespace {

// Two disjoint parallel copies of one slope on the torus, as marker curves,
// with a chosen puncture count in each of the two annuli between them.
Arrangement parallel_pair_on_torus(int punctures_a, int punctures_b) {
  Arrangement arr;
  arr.surface = SurfaceSig{1, punctures_a + punctures_b};
  arr.curves = {{}, {}};
  Region a{0, punctures_a, {{1}, {2}}, false};
  Region b{0, punctures_b, {{0}, {3}}, false};
  arr.regions = {a, b};
  return arr;
}

// A single curve on the n-punctured sphere splitting the punctures
// inside/outside.
Arrangement circle_on_sphere(int punctures_inside, int punctures_outside) {
  Arrangement arr;
  arr.surface = SurfaceSig{0, punctures_inside + punctures_outside};
  arr.curves = {{}};
  Region in{1, punctures_inside, {{0}}, false};
  Region out{1, punctures_outside, {{1}}, false};
  arr.regions = {in, out};
  return arr;
}

}  // namespace

TEST_CASE("essentiality") {
  SECTION("a (1,0) curve on the once-punctured torus is essential") {
    Arrangement arr;
    arr.surface = SurfaceSig{1, 1};
    arr.curves = {{}};
    arr.regions = {Region{0, 1, {{0}, {1}}, false}};
    REQUIRE(validate_arrangement(arr).empty());
    REQUIRE(is_essential(arr, 0));
  }
  SECTION("a curve bounding a once-punctured disk on the 4-punctured sphere is not") {
    REQUIRE_FALSE(is_essential(circle_on_sphere(1, 3), 0));
  }
  SECTION("a curve bounding an unpunctured disk is not") {
    REQUIRE_FALSE(is_essential(circle_on_sphere(0, 4), 0));
  }
  SECTION("unknown curve id") {
    REQUIRE_THROWS_AS(is_essential(circle_on_sphere(2, 2), 3), std::invalid_argument);
  }
}

TEST_CASE("parallel copies: homotopic exactly when an annulus is empty") {
  auto one_puncture = parallel_pair_on_torus(1, 0);
  REQUIRE(validate_arrangement(one_puncture).empty());
  REQUIRE(are_homotopic(one_puncture, 0, 1));

  auto split = parallel_pair_on_torus(1, 1);
  REQUIRE_FALSE(are_homotopic(split, 0, 1));
}

TEST_CASE("are_homotopic is symmetric") {
  auto one = parallel_pair_on_torus(1, 0);
  REQUIRE(are_homotopic(one, 0, 1) == are_homotopic(one, 1, 0));
  auto two = parallel_pair_on_torus(1, 1);
  REQUIRE(are_homotopic(two, 0, 1) == are_homotopic(two, 1, 0));
  auto crossing = torus_k1_fill(1);
  REQUIRE(are_homotopic(crossing, 0, 1) == are_homotopic(crossing, 1, 0));
}

TEST_CASE("one surviving crossing rules homotopy out") {
  // (1,0) and (0,1) on the once-punctured torus cross once; odd intersection
  // cannot vanish under bigon moves.
  auto arr = torus_k1_fill(1);
  REQUIRE(arr.curves.size() == 2);
  REQUIRE(arr.crossings.size() == 1);
  REQUIRE_FALSE(are_homotopic(arr, 0, 1));
}

TEST_CASE("bigon reduction finds the homotopy of a doubled circle") {
  auto arr = sphere_fill(4, 2);
  arr.regions[0].punctures = 0;  // both lens faces empty, caps hold 2 + 2
  arr.regions[1].punctures = 2;
  arr.regions[2].punctures = 2;
  arr.regions[3].punctures = 0;
  REQUIRE(validate_arrangement(arr).empty());
  REQUIRE(are_homotopic(arr, 0, 1));
  REQUIRE(are_homotopic(arr, 1, 0));
}

TEST_CASE("are_homotopic rejects inessential input") {
  auto arr = circle_on_sphere(1, 3);
  Arrangement two = arr;
  two.curves.push_back({});
  two.regions = {Region{1, 1, {{0}}, false}, Region{0, 0, {{1}, {2}}, false},
                 Region{1, 3, {{3}}, false}};
  REQUIRE(validate_arrangement(two).empty());
  REQUIRE_THROWS_AS(are_homotopic(two, 0, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(are_homotopic(two, 0, 0), std::invalid_argument);
}

TEST_CASE("verify_k_filling on the 4-punctured sphere pair") {
  auto arr = sphere_fill(4, 2);

  SECTION("passes at k = 2") {
    auto cert = verify_k_filling(arr, 2);
    REQUIRE(cert.pass);
    REQUIRE(cert.max_intersections == 2);
  }
  SECTION("fails at k = 1 on the intersection bound, with a witness") {
    auto cert = verify_k_filling(arr, 1);
    REQUIRE_FALSE(cert.pass);
    REQUIRE_FALSE(cert.intersections_ok);
    REQUIRE(cert.worst_pair.has_value());
    REQUIRE(cert.max_intersections == 2);
    REQUIRE(cert.all_essential);
    REQUIRE(cert.complement_ok);
  }
  SECTION("deleting a puncture (n = 3) breaks essentiality") {
    // On the 3-punctured sphere no simple closed curve is essential, so the
    // certificate fails on (b); the homotopy check only covers essential
    // pairs.
    arr.regions[0].punctures = 0;
    arr.surface.punctures = 3;
    REQUIRE(validate_arrangement(arr).empty());
    auto cert = verify_k_filling(arr, 2);
    REQUIRE_FALSE(cert.pass);
    REQUIRE_FALSE(cert.all_essential);
    REQUIRE(cert.inessential.size() == 2);
  }
}

TEST_CASE("verify_k_filling is monotone in k") {
  auto arr = sphere_fill(5, 2);
  REQUIRE(verify_k_filling(arr, 2).pass);
  for (int k = 2; k <= 8; ++k) REQUIRE(verify_k_filling(arr, k).pass);

  auto cyl_pair = verify_k_filling(sphere_fill(4, 4), 2);  // crosses 4 times
  REQUIRE_FALSE(cyl_pair.pass);
  REQUIRE(verify_k_filling(sphere_fill(4, 4), 4).pass);
}

TEST_CASE("verify_k_filling flags non-disk complements") {
  auto arr = parallel_pair_on_torus(1, 1);
  auto cert = verify_k_filling(arr, 2);
  REQUIRE_FALSE(cert.pass);
  REQUIRE_FALSE(cert.complement_ok);
  REQUIRE(cert.bad_regions.size() == 2);
}
