#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fillset/homotopy.hpp"
#include "fillset/hyperbolic.hpp"

using namespace fillset;

TEST_CASE("ngon geometry identities") {
  SECTION("hexagon") {
    auto geo = ngon_geometry(6);
    REQUIRE(std::cosh(geo.apothem) == Catch::Approx(2.0).epsilon(1e-12));
    REQUIRE(geo.d_k(2) == Catch::Approx(2.0 * std::acosh(std::sqrt(3.0))).epsilon(1e-12));
    REQUIRE(geo.d_k(3) == Catch::Approx(2.0 * std::acosh(2.0)).epsilon(1e-12));
    REQUIRE(geo.d_k(3) > geo.d_k(2));
    REQUIRE(geo.systole_length == Catch::Approx(2.0 * geo.d_k(2)).epsilon(1e-15));
  }
  SECTION("pentagon") {
    auto geo = ngon_geometry(5);
    REQUIRE(std::cosh(geo.apothem) == Catch::Approx(1.0 / std::sin(kPi / 5)).epsilon(1e-12));
    double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    REQUIRE(std::cosh(geo.d_k(2) / 2) == Catch::Approx(golden).epsilon(1e-12));
  }
  SECTION("both trig identities hold to 1e-12 for n up to 200") {
    for (int n = 5; n <= 200; ++n) {
      auto geo = ngon_geometry(n);
      REQUIRE(std::cosh(geo.apothem) * std::sin(kPi / n) == Catch::Approx(1.0).epsilon(1e-12));
      for (int k = 2; k <= n / 2; ++k)
        REQUIRE(std::cosh(geo.d_k(k) / 2) ==
                Catch::Approx(std::cosh(geo.apothem) * std::sin(kPi * k / n)).epsilon(1e-12));
      for (int k = 3; k <= n / 2; ++k) REQUIRE(geo.d_k(k) > geo.d_k(k - 1) + 1e-12);
    }
  }
  SECTION("the apothem grows with n") {
    double prev = 0;
    for (int n = 5; n <= 64; ++n) {
      auto geo = ngon_geometry(n);
      REQUIRE(geo.apothem > prev);
      prev = geo.apothem;
    }
  }
  SECTION("n = 4 is rejected as a degenerate side pairing") {
    REQUIRE_THROWS_AS(ngon_geometry(4), std::invalid_argument);
  }
}

TEST_CASE("cone area") {
  REQUIRE(cone_area(SurfaceSig{2, 0}) == Catch::Approx(4.0 * kPi).epsilon(1e-15));
  REQUIRE(cone_area(SurfaceSig{1, 1}) == Catch::Approx(kPi).epsilon(1e-15));
  REQUIRE(cone_area(SurfaceSig{0, 4}) == Catch::Approx(0.0).margin(1e-15));
  // Rearranged form: 2 pi (2g - 2) + pi n.
  for (int g = 0; g <= 5; ++g)
    for (int n = 0; n <= 5; ++n)
      REQUIRE(cone_area(SurfaceSig{g, n}) ==
              Catch::Approx(2.0 * kPi * (2 * g - 2) + kPi * n).margin(1e-12));
}

TEST_CASE("isoperimetric floor") {
  REQUIRE(isoperimetric_floor(4.0 * kPi) == Catch::Approx(4.0 * kPi * std::sqrt(2.0)).epsilon(1e-12));
  REQUIRE(isoperimetric_floor(kPi) == Catch::Approx(kPi * std::sqrt(5.0)).epsilon(1e-12));
  for (double a : {1e-6, 0.5, 3.0, 100.0}) REQUIRE(isoperimetric_floor(a) > a);
  REQUIRE_THROWS_AS(isoperimetric_floor(0.0), std::invalid_argument);
}

TEST_CASE("doubled pentagon arrangement") {
  auto rep = ngon_arrangement(5);
  const auto& arr = rep.arrangement;
  REQUIRE(arr.vertex_count() == 10);
  REQUIRE(arr.edge_count() == 20);
  REQUIRE(arr.regions.size() == 12);
  int punctured = 0;
  for (const auto& r : arr.regions) punctured += r.punctures;
  REQUIRE(punctured == 5);
  REQUIRE(verify_k_filling(arr, 2).pass);
  REQUIRE(rep.count_bound_respected);
}

TEST_CASE("doubled hexagon: cyclic intersection pattern") {
  auto rep = ngon_arrangement(6);
  auto m = intersection_matrix(rep.arrangement);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int d = std::min((i - j + 6) % 6, (j - i + 6) % 6);
      REQUIRE(m.at(i, j) == (d == 1 ? 2 : 0));
    }
}

TEST_CASE("ngon arrangements across the acceptance range") {
  for (int n = 5; n <= 20; ++n) {
    auto rep = ngon_arrangement(n);
    const auto& arr = rep.arrangement;
    CAPTURE(n);
    REQUIRE(static_cast<int>(arr.curves.size()) == n);
    REQUIRE(arr.vertex_count() == 2 * n);
    REQUIRE(arr.edge_count() == 4 * n);
    REQUIRE(static_cast<int>(arr.regions.size()) == 2 * n + 2);
    auto m = intersection_matrix(arr);
    for (int i = 0; i < m.n; ++i)
      for (int j = i + 1; j < m.n; ++j) REQUIRE((m.at(i, j) == 0 || m.at(i, j) == 2));
  }
}
