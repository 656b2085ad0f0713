#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fillset/surface.hpp"

namespace fillset {

/// One transverse intersection of two distinct simple curves.  `passages`
/// records (curve, position-along-curve) for each strand; `sign` is the
/// orientation of the ordered frame (tangent of passages[0], tangent of
/// passages[1]) and fixes the cyclic order of the four strand-ends.
struct Crossing {
  int id = 0;
  std::array<std::pair<int, int>, 2> passages{};
  int sign = 1;
};

/// One complementary component of the multicurve, in the closed model:
/// punctures are counted marks, they do not change chi.  Boundary walks are
/// cyclic dart sequences (see dart encoding below); a disk has chi 1 and a
/// single walk.  `boundary` marks the two rim annuli of a cylinder
/// arrangement.
struct Region {
  int chi = 1;
  int punctures = 0;
  std::vector<std::vector<int>> walks;
  bool boundary = false;
};

/// A multicurve drawn on a surface.  Each curve is the cyclic list of
/// crossing ids it passes through; a curve with no crossings implicitly
/// carries one 2-valent marker point so it still contributes a vertex and a
/// loop edge to the traced graph.  `boundary_circles` is 0 for closed
/// surfaces and 2 for cylinder arrangements (rim circles are not part of the
/// graph; they lower the Euler characteristic by one each).
struct Arrangement {
  SurfaceSig surface;
  int boundary_circles = 0;
  std::vector<std::vector<int>> curves;
  std::vector<Crossing> crossings;
  std::vector<Region> regions;

  int num_markers() const {
    int m = 0;
    for (const auto& c : curves)
      if (c.empty()) ++m;
    return m;
  }
  /// Vertices of the traced graph: 4-valent crossings plus 2-valent markers.
  int vertex_count() const { return static_cast<int>(crossings.size()) + num_markers(); }
  /// Edges: two per crossing passage pair, one loop per marker.
  int edge_count() const { return 2 * static_cast<int>(crossings.size()) + num_markers(); }
  int expected_chi() const { return 2 - 2 * surface.genus - boundary_circles; }
};

// ---------------------------------------------------------------------------
// Dart encoding.
//
// Arc t of curve c runs from stop t to stop (t+1) mod L, where the stops are
// the curve's crossings (or its marker when it has none; a marker curve has a
// single loop arc).  Each arc owns two darts: 2*arc is the forward dart,
// 2*arc+1 the backward one.  alpha (dart reversal) is `dart ^ 1`.
// ---------------------------------------------------------------------------

inline int dart_of(int arc, bool backward) { return 2 * arc + (backward ? 1 : 0); }
inline int arc_of_dart(int dart) { return dart / 2; }
inline bool dart_backward(int dart) { return dart & 1; }
inline int dart_reverse(int dart) { return dart ^ 1; }

/// Resolved incidence structure of an arrangement: arc numbering, the
/// rotation system sigma, and the face permutation phi = sigma . alpha.
/// Construction throws std::runtime_error when cross-references are
/// inconsistent; validate_arrangement reports the same problems without
/// throwing.
struct Topology {
  const Arrangement* arr = nullptr;
  std::vector<int> arc_base;        // first arc index of each curve
  std::vector<int> arcs_per_curve;  // max(1, #stops)
  int arc_count = 0;
  std::unordered_map<int, int> crossing_index_by_id;
  std::vector<int> sigma_next;  // next outgoing dart, CCW, at the tail vertex

  int dart(int curve, int arc_pos, bool backward) const {
    return dart_of(arc_base[curve] + arc_pos, backward);
  }
  int curve_of_arc(int arc) const {
    auto it = std::upper_bound(arc_base.begin(), arc_base.end(), arc);
    return static_cast<int>(it - arc_base.begin()) - 1;
  }
  int curve_of_dart(int d) const { return curve_of_arc(arc_of_dart(d)); }
  int arc_pos(int arc) const { return arc - arc_base[curve_of_arc(arc)]; }
  int dart_count() const { return 2 * arc_count; }

  /// Face permutation: arrive along d, reverse, turn to the next dart CCW.
  /// The orbit of d is the boundary walk of the region on the right of d.
  int phi(int d) const { return sigma_next[dart_reverse(d)]; }

  /// All phi-orbits, each rotated to start at its smallest dart, listed in
  /// order of that smallest dart.
  std::vector<std::vector<int>> orbits() const {
    std::vector<char> seen(dart_count(), 0);
    std::vector<std::vector<int>> out;
    for (int d0 = 0; d0 < dart_count(); ++d0) {
      if (seen[d0]) continue;
      std::vector<int> cyc;
      int d = d0;
      do {
        if (seen[d]) throw std::runtime_error("face trace does not close (corner rule inconsistent)");
        seen[d] = 1;
        cyc.push_back(d);
        d = phi(d);
      } while (d != d0);
      out.push_back(std::move(cyc));
    }
    return out;
  }
};

/// Rotate a cyclic dart walk so it starts at its smallest dart.
inline std::vector<int> canonical_walk(std::vector<int> walk) {
  if (walk.empty()) return walk;
  auto it = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), it, walk.end());
  return walk;
}

inline std::vector<std::vector<int>> canonical_walks(std::vector<std::vector<int>> walks) {
  for (auto& w : walks) w = canonical_walk(std::move(w));
  std::sort(walks.begin(), walks.end());
  return walks;
}

namespace detail {

/// Fills `topo` from `arr`; on structural problems appends messages to
/// `errors` and returns false.  Used both by analyze() and the validator.
inline bool build_topology(const Arrangement& arr, Topology& topo, std::vector<std::string>* errors) {
  auto fail = [&](const std::string& msg) {
    if (errors) errors->push_back(msg);
    return false;
  };
  bool ok = true;

  topo.arr = &arr;
  const int num_curves = static_cast<int>(arr.curves.size());
  topo.arc_base.assign(num_curves, 0);
  topo.arcs_per_curve.assign(num_curves, 0);
  int base = 0;
  for (int c = 0; c < num_curves; ++c) {
    topo.arc_base[c] = base;
    topo.arcs_per_curve[c] = arr.curves[c].empty() ? 1 : static_cast<int>(arr.curves[c].size());
    base += topo.arcs_per_curve[c];
  }
  topo.arc_count = base;

  topo.crossing_index_by_id.clear();
  for (int i = 0; i < static_cast<int>(arr.crossings.size()); ++i) {
    if (!topo.crossing_index_by_id.emplace(arr.crossings[i].id, i).second)
      ok = fail("duplicate crossing id " + std::to_string(arr.crossings[i].id));
  }

  // Passage records and curve stop lists must agree exactly.
  for (const Crossing& x : arr.crossings) {
    if (x.sign != 1 && x.sign != -1)
      ok = fail("crossing " + std::to_string(x.id) + " has sign other than +/-1");
    if (x.passages[0].first == x.passages[1].first)
      ok = fail("crossing " + std::to_string(x.id) + " joins a curve to itself (curves are simple)");
    for (const auto& [c, pos] : x.passages) {
      if (c < 0 || c >= num_curves) {
        ok = fail("crossing " + std::to_string(x.id) + " references unknown curve " + std::to_string(c));
        continue;
      }
      if (pos < 0 || pos >= static_cast<int>(arr.curves[c].size()) || arr.curves[c][pos] != x.id)
        ok = fail("crossing " + std::to_string(x.id) + " passage (curve " + std::to_string(c) +
                  ", pos " + std::to_string(pos) + ") does not match the curve's stop list");
    }
  }
  for (int c = 0; c < num_curves; ++c) {
    for (int t = 0; t < static_cast<int>(arr.curves[c].size()); ++t) {
      auto it = topo.crossing_index_by_id.find(arr.curves[c][t]);
      if (it == topo.crossing_index_by_id.end()) {
        ok = fail("curve " + std::to_string(c) + " references unknown crossing id " +
                  std::to_string(arr.curves[c][t]));
        continue;
      }
      const Crossing& x = arr.crossings[it->second];
      int hits = 0;
      for (const auto& [pc, pt] : x.passages)
        if (pc == c && pt == t) ++hits;
      if (hits != 1)
        ok = fail("stop (curve " + std::to_string(c) + ", pos " + std::to_string(t) +
                  ") is referenced by crossing " + std::to_string(x.id) + " " + std::to_string(hits) +
                  " times (expected exactly one passage)");
    }
  }
  if (!ok) return false;

  // Rotation system.  At a crossing with passages a = passages[0],
  // b = passages[1] the CCW order of outgoing darts is
  //   sign +1: [a_out, b_out, a_in, b_in]
  //   sign -1: [a_out, b_in, a_in, b_out]
  // where X_out is the forward dart of the arc leaving the vertex along X and
  // X_in the backward dart of the arc arriving along X.  At a marker the two
  // loop darts alternate.
  topo.sigma_next.assign(topo.dart_count(), -1);
  auto assign_cycle = [&](const std::vector<int>& cyc) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int d = cyc[i];
      if (topo.sigma_next[d] != -1) {
        ok = fail("strand-end appears at two vertices (dart " + std::to_string(d) + ")");
        return;
      }
      topo.sigma_next[d] = cyc[(i + 1) % cyc.size()];
    }
  };
  for (const Crossing& x : arr.crossings) {
    auto ends = [&](int which) -> std::pair<int, int> {
      auto [c, pos] = x.passages[which];
      int len = static_cast<int>(arr.curves[c].size());
      int out = topo.dart(c, pos, false);
      int in = topo.dart(c, (pos + len - 1) % len, true);
      return {out, in};
    };
    auto [a_out, a_in] = ends(0);
    auto [b_out, b_in] = ends(1);
    if (x.sign == 1)
      assign_cycle({a_out, b_out, a_in, b_in});
    else
      assign_cycle({a_out, b_in, a_in, b_out});
    if (!ok) return false;
  }
  for (int c = 0; c < num_curves; ++c) {
    if (!arr.curves[c].empty()) continue;
    assign_cycle({topo.dart(c, 0, false), topo.dart(c, 0, true)});
    if (!ok) return false;
  }
  for (int d = 0; d < topo.dart_count(); ++d)
    if (topo.sigma_next[d] == -1) return fail("strand-end missing from every vertex (dart " + std::to_string(d) + ")");
  return true;
}

}  // namespace detail

/// Resolve the incidence structure, throwing on malformed references.
inline Topology analyze(const Arrangement& arr) {
  Topology topo;
  std::vector<std::string> errors;
  if (!detail::build_topology(arr, topo, &errors))
    throw std::runtime_error("malformed arrangement: " + (errors.empty() ? "unknown" : errors.front()));
  return topo;
}

/// Empty when every Arrangement invariant holds; otherwise one entry per
/// violated invariant, naming the offending ids.  Never throws.
inline std::vector<std::string> validate_arrangement(const Arrangement& arr) {
  std::vector<std::string> report;
  if (arr.surface.genus < 0) report.push_back("negative genus");
  if (arr.surface.punctures < 0) report.push_back("negative puncture count");
  if (arr.boundary_circles != 0 && arr.boundary_circles != 2)
    report.push_back("boundary_circles must be 0 (closed) or 2 (cylinder)");

  Topology topo;
  if (!detail::build_topology(arr, topo, &report)) return report;

  // Euler identity: v - e + sum chi = 2 - 2g - boundary circles.
  int sum_chi = 0;
  for (const Region& r : arr.regions) sum_chi += r.chi;
  const int v = arr.vertex_count(), e = arr.edge_count();
  if (v - e + sum_chi != arr.expected_chi())
    report.push_back("Euler identity violated: v - e + sum(chi) = " + std::to_string(v - e + sum_chi) +
                     ", expected " + std::to_string(arr.expected_chi()));

  int total_punctures = 0;
  for (const Region& r : arr.regions) total_punctures += r.punctures;
  if (total_punctures != arr.surface.punctures)
    report.push_back("puncture total != n (regions hold " + std::to_string(total_punctures) +
                     ", surface declares " + std::to_string(arr.surface.punctures) + ")");

  int boundary_regions = 0;
  for (int i = 0; i < static_cast<int>(arr.regions.size()); ++i) {
    const Region& r = arr.regions[i];
    if (r.chi > 1) report.push_back("region " + std::to_string(i) + " has chi > 1");
    if (r.punctures < 0) report.push_back("region " + std::to_string(i) + " has negative punctures");
    if (r.chi == 1 && r.walks.size() != 1)
      report.push_back("disk region " + std::to_string(i) + " has " + std::to_string(r.walks.size()) +
                       " boundary walks (a disk has exactly one)");
    if (r.boundary) ++boundary_regions;
  }
  if (arr.boundary_circles != boundary_regions &&
      !(arr.boundary_circles == 0 && boundary_regions == 0))
    report.push_back("boundary-flagged regions (" + std::to_string(boundary_regions) +
                     ") do not match boundary_circles (" + std::to_string(arr.boundary_circles) + ")");

  // Boundary walks must partition the darts and follow the corner rule.
  std::vector<int> owner(topo.dart_count(), -1);
  for (int i = 0; i < static_cast<int>(arr.regions.size()); ++i) {
    for (const auto& walk : arr.regions[i].walks) {
      if (walk.empty()) {
        report.push_back("region " + std::to_string(i) + " has an empty boundary walk");
        continue;
      }
      for (size_t j = 0; j < walk.size(); ++j) {
        int d = walk[j];
        if (d < 0 || d >= topo.dart_count()) {
          report.push_back("region " + std::to_string(i) + " walk references invalid dart " + std::to_string(d));
          continue;
        }
        if (owner[d] != -1)
          report.push_back("dart " + std::to_string(d) + " appears in two boundary walks");
        owner[d] = i;
        if (topo.phi(d) != walk[(j + 1) % walk.size()])
          report.push_back("walk of region " + std::to_string(i) + " is not closed under the corner rule at dart " +
                           std::to_string(d));
      }
    }
  }
  for (int d = 0; d < topo.dart_count(); ++d)
    if (owner[d] == -1) report.push_back("dart " + std::to_string(d) + " lies on no boundary walk");
  return report;
}

inline bool is_valid(const Arrangement& arr) { return validate_arrangement(arr).empty(); }

/// Pairwise geometric crossing counts as drawn, indexed by curve.
struct IntersectionMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major n x n

  int at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
  int& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
  int max_off_diagonal(int* wi = nullptr, int* wj = nullptr) const {
    int best = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (at(i, j) > best) {
          best = at(i, j);
          if (wi) *wi = i;
          if (wj) *wj = j;
        }
    return best;
  }
};

inline IntersectionMatrix intersection_matrix(const Arrangement& arr) {
  IntersectionMatrix m;
  m.n = static_cast<int>(arr.curves.size());
  m.entries.assign(static_cast<size_t>(m.n) * m.n, 0);
  for (const Crossing& x : arr.crossings) {
    int i = x.passages[0].first, j = x.passages[1].first;
    ++m.at(i, j);
    ++m.at(j, i);
  }
  return m;
}

/// Face tracing.  With `cellular` set, faces are traced from the rotation
/// data by the next-corner rule; all of them are disks and their count f
/// satisfies v - e + f = 2 - 2g (the closed model; rim circles of a cylinder
/// are capped by the trace).  Puncture counts are carried over from stored
/// regions with matching walks.  Without the flag the stored regions are
/// echoed after validation.
inline std::vector<Region> trace_regions(const Arrangement& arr, bool cellular) {
  if (!cellular) {
    auto report = validate_arrangement(arr);
    if (!report.empty()) throw std::runtime_error("invalid arrangement: " + report.front());
    return arr.regions;
  }
  Topology topo = analyze(arr);
  auto orbits = topo.orbits();
  const int v = arr.vertex_count(), e = arr.edge_count();
  const int f = static_cast<int>(orbits.size());
  if (v - e + f != 2 - 2 * arr.surface.genus)
    throw std::runtime_error("arrangement is not cellular: traced " + std::to_string(f) +
                             " faces, Euler identity needs " + std::to_string(2 - 2 * arr.surface.genus - v + e));

  std::unordered_map<std::string, int> stored;  // canonical walk key -> punctures
  auto key_of = [](const std::vector<int>& w) {
    std::string k;
    for (int d : w) k += std::to_string(d) + ",";
    return k;
  };
  for (const Region& r : arr.regions)
    if (r.walks.size() == 1) stored[key_of(canonical_walk(r.walks.front()))] = r.punctures;

  std::vector<Region> out;
  out.reserve(orbits.size());
  for (auto& orbit : orbits) {
    Region r;
    r.chi = 1;
    auto it = stored.find(key_of(canonical_walk(orbit)));
    r.punctures = it == stored.end() ? 0 : it->second;
    r.walks.push_back(std::move(orbit));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fillset
