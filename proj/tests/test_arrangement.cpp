#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>

#include "fillset/arrangement.hpp"
#include "fillset/constructions.hpp"

using namespace fillset;

namespace {

bool report_mentions(const std::vector<std::string>& report, const std::string& needle) {
  return std::any_of(report.begin(), report.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

// One marker curve on the torus; its complement is a single annulus.
Arrangement marker_curve_on_torus(int punctures) {
  Arrangement arr;
  arr.surface = SurfaceSig{1, punctures};
  arr.curves = {{}};
  Region annulus;
  annulus.chi = 0;
  annulus.punctures = punctures;
  annulus.walks = {{0}, {1}};
  arr.regions = {annulus};
  return arr;
}

}  // namespace

TEST_CASE("generator output validates cleanly") {
  REQUIRE(validate_arrangement(sphere_fill(4, 2)).empty());
  REQUIRE(validate_arrangement(torus_fill(2, 2)).empty());
  REQUIRE(validate_arrangement(torus_k1_fill(3)).empty());
  REQUIRE(validate_arrangement(sine_cylinder(3, 2)).empty());
}

TEST_CASE("validator reports a wrong puncture total") {
  Arrangement arr = sphere_fill(4, 2);
  arr.regions.front().punctures += 1;
  auto report = validate_arrangement(arr);
  REQUIRE_FALSE(report.empty());
  REQUIRE(report_mentions(report, "puncture total != n"));
}

TEST_CASE("validator reports a broken Euler identity") {
  Arrangement arr = sphere_fill(4, 2);
  arr.surface.genus = 1;  // v - e + sum(chi) = 2, but the torus needs 0
  auto report = validate_arrangement(arr);
  REQUIRE(report_mentions(report, "Euler identity violated"));
}

TEST_CASE("validator rejects malformed references without crashing") {
  Arrangement arr = sphere_fill(4, 2);

  SECTION("self-crossing") {
    arr.crossings.front().passages[1].first = arr.crossings.front().passages[0].first;
    REQUIRE(report_mentions(validate_arrangement(arr), "joins a curve to itself"));
  }
  SECTION("dangling crossing reference") {
    arr.curves[0][0] = 999;
    REQUIRE(report_mentions(validate_arrangement(arr), "unknown crossing id"));
  }
  SECTION("bad sign") {
    arr.crossings.front().sign = 2;
    REQUIRE(report_mentions(validate_arrangement(arr), "sign"));
  }
  SECTION("walks must partition the strand-sides") {
    arr.regions[0].walks.front() = arr.regions[1].walks.front();
    REQUIRE_FALSE(validate_arrangement(arr).empty());
  }
}

TEST_CASE("marker curve bookkeeping") {
  Arrangement arr = marker_curve_on_torus(1);
  REQUIRE(arr.vertex_count() == 1);
  REQUIRE(arr.edge_count() == 1);
  REQUIRE(validate_arrangement(arr).empty());
}

TEST_CASE("intersection matrix") {
  SECTION("capped cylinder: every pair crosses exactly k times") {
    auto m = intersection_matrix(cap_cylinder(sine_cylinder(3, 2)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) REQUIRE(m.at(i, j) == (i == j ? 0 : 2));
  }
  SECTION("torus k=1 triple: one crossing across families") {
    auto m = intersection_matrix(torus_k1_fill(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) REQUIRE(m.at(i, j) == (i == j ? 0 : 1));
  }
  SECTION("marker curve: zero matrix") {
    auto m = intersection_matrix(marker_curve_on_torus(1));
    REQUIRE(m.n == 1);
    REQUIRE(m.at(0, 0) == 0);
  }
  SECTION("entries sum to the crossing count") {
    auto arr = torus_k1_fill(8);
    auto m = intersection_matrix(arr);
    int sum = 0;
    for (int i = 0; i < m.n; ++i)
      for (int j = i + 1; j < m.n; ++j) sum += m.at(i, j);
    REQUIRE(sum == static_cast<int>(arr.crossings.size()));
  }
}

TEST_CASE("trace_regions") {
  SECTION("capped 2-curve cylinder: four disks") {
    auto arr = cap_cylinder(sine_cylinder(2, 2));
    auto regions = trace_regions(arr, true);
    REQUIRE(regions.size() == 4);
    for (const auto& r : regions) {
      REQUIRE(r.chi == 1);
      REQUIRE(r.walks.size() == 1);
    }
  }
  SECTION("torus k1 triple: three disks") {
    auto regions = trace_regions(torus_k1_fill(3), true);
    REQUIRE(regions.size() == 3);
    for (const auto& r : regions) REQUIRE(r.chi == 1);
  }
  SECTION("traced faces keep stored punctures") {
    auto arr = sphere_fill(4, 2);
    auto regions = trace_regions(arr, true);
    int total = 0;
    for (const auto& r : regions) total += r.punctures;
    REQUIRE(total == 4);
  }
  SECTION("non-cellular arrangement: echo stored regions, reject tracing") {
    auto arr = marker_curve_on_torus(1);
    auto echoed = trace_regions(arr, false);
    REQUIRE(echoed.size() == 1);
    REQUIRE(echoed.front().chi == 0);
    REQUIRE_THROWS_AS(trace_regions(arr, true), std::runtime_error);
  }
}

TEST_CASE("Euler identity and hand-shake across generators") {
  for (const Arrangement& arr :
       {sphere_fill(6, 2), torus_fill(5, 4), torus_k1_fill(10), cap_cylinder(sine_cylinder(4, 2))}) {
    int sum_chi = 0;
    for (const auto& r : arr.regions) sum_chi += r.chi;
    REQUIRE(arr.vertex_count() - arr.edge_count() + sum_chi == 2 - 2 * arr.surface.genus);
    if (arr.num_markers() == 0) REQUIRE(arr.edge_count() == 2 * arr.vertex_count());
  }
}
