#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fillset/arrangement.hpp"
#include "fillset/surface.hpp"
#include "fillset/surgery.hpp"

namespace fillset {

inline constexpr double kPi = 3.14159265358979323846;

/// Distances in the regular ideal n-gon: apothem d with cosh d = 1/sin(pi/n),
/// and the common orthogonals d_k between sides k apart with
/// cosh(d_k/2) = cosh d * sin(pi k/n).  The systole of the doubled polygon is
/// 2 d_2.
struct NgonGeometry {
  int n = 0;
  double apothem = 0;
  std::vector<double> ortho;  // ortho[i] = d_{i+2}, for 2 <= k <= n/2
  double systole_length = 0;

  double d_k(int k) const {
    if (k < 2 || k > n / 2) throw std::invalid_argument("d_k defined for 2 <= k <= n/2");
    return ortho[k - 2];
  }
};

inline NgonGeometry ngon_geometry(int n) {
  if (n < 5)
    throw std::invalid_argument(
        "ngon_geometry: needs n >= 5 (for n = 4 the side pairs {i, i+2} give only two distinct orthogonals)");
  NgonGeometry geo;
  geo.n = n;
  const double cosh_d = 1.0 / std::sin(kPi / n);
  geo.apothem = std::acosh(cosh_d);
  for (int k = 2; k <= n / 2; ++k) geo.ortho.push_back(2.0 * std::acosh(cosh_d * std::sin(kPi * k / n)));
  for (size_t i = 1; i < geo.ortho.size(); ++i)
    if (!(geo.ortho[i] > geo.ortho[i - 1] + 1e-12))
      throw std::logic_error("ngon_geometry: orthogonal lengths must increase strictly in k");
  geo.systole_length = 2.0 * geo.d_k(2);
  return geo;
}

/// Area of the cone metric with angle pi at each puncture:
/// 2 pi (2g - 1) + pi (n - 2).
inline double cone_area(const SurfaceSig& sig) {
  return 2.0 * kPi * (2 * sig.genus - 1) + kPi * (sig.punctures - 2);
}

/// Isoperimetric floor sqrt(A^2 + 4 pi A) for the total boundary length of a
/// hyperbolic polygon decomposition of area A.
inline double isoperimetric_floor(double area) {
  if (!(area > 0)) throw std::invalid_argument("isoperimetric_floor: area must be positive");
  double v = std::sqrt(area * area + 4.0 * kPi * area);
  if (!(v > area)) throw std::logic_error("isoperimetric_floor: floor must exceed the area");
  return v;
}

/// The doubled regular ideal n-gon with its n systoles, combinatorially: two
/// polygon copies glued along their sides, curve i the double of the
/// orthogonal between sides i and i+2.  Consecutive curves cross twice (once
/// per copy), all other pairs are disjoint; v = 2n, e = 4n, f = 2n + 2; the
/// n faces holding an ideal vertex carry one puncture each.
struct NgonSystoleReport {
  NgonGeometry geometry;
  Arrangement arrangement;
  double count_lower_bound = 0;  // cone_area / (4 * systole length), g = 0
  bool count_bound_respected = false;
};

inline NgonSystoleReport ngon_arrangement(int n) {
  NgonSystoleReport report;
  report.geometry = ngon_geometry(n);

  Arrangement arr;
  arr.surface = SurfaceSig{0, n};
  arr.curves.resize(n);

  // Curve i stops: front crossing with i-1, front with i+1, back with i+1,
  // back with i-1.  Front crossing f_i = (c_i, c_{i+1}) has id i, back b_i
  // has id n + i; the mirror copy reverses the local orientation, so the
  // back signs flip.
  auto prev = [&](int i) { return (i + n - 1) % n; };
  for (int i = 0; i < n; ++i) {
    arr.curves[i] = {prev(i), i, n + i, n + prev(i)};
  }
  for (int i = 0; i < n; ++i) {
    Crossing front;
    front.id = i;
    front.passages[0] = {i, 1};
    front.passages[1] = {(i + 1) % n, 0};
    front.sign = 1;
    arr.crossings.push_back(front);
  }
  for (int i = 0; i < n; ++i) {
    Crossing back;
    back.id = n + i;
    back.passages[0] = {i, 2};
    back.passages[1] = {(i + 1) % n, 3};
    back.sign = -1;
    arr.crossings.push_back(back);
  }

  {
    Topology topo = analyze(arr);
    auto orbits = topo.orbits();
    arr.regions.clear();
    for (auto& orbit : orbits) {
      Region r;
      r.chi = 1;
      r.walks.push_back(std::move(orbit));
      arr.regions.push_back(std::move(r));
    }
    if (static_cast<int>(arr.regions.size()) != 2 * n + 2)
      throw std::logic_error("ngon_arrangement: expected 2n + 2 faces");

    // The face containing ideal vertex v_j is the bigon cut off by curves
    // j-2 and j-1 running through the glued sides j-1 and j.
    auto owner = region_of_dart_map(arr, topo);
    for (int j = 0; j < n; ++j) {
      int c = (j + n - 1) % n;  // curve j-1, whose last arc passes the vertex
      int face = owner[topo.dart(c, 3, false)];
      if (arr.regions[face].walks.front().size() != 2)
        throw std::logic_error("ngon_arrangement: vertex face is not a bigon");
      if (arr.regions[face].punctures != 0)
        throw std::logic_error("ngon_arrangement: vertex faces must be distinct");
      arr.regions[face].punctures = 1;
    }
  }

  report.arrangement = std::move(arr);
  report.count_lower_bound = cone_area(SurfaceSig{0, n}) / (4.0 * report.geometry.systole_length);
  report.count_bound_respected = static_cast<double>(n) >= report.count_lower_bound;
  return report;
}

}  // namespace fillset
