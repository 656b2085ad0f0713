#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fillset/arrangement.hpp"

namespace fillset {

/// Region index owning each dart, read off the stored boundary walks.
inline std::vector<int> region_of_dart_map(const Arrangement& arr, const Topology& topo) {
  std::vector<int> owner(topo.dart_count(), -1);
  for (int i = 0; i < static_cast<int>(arr.regions.size()); ++i)
    for (const auto& walk : arr.regions[i].walks)
      for (int d : walk) {
        if (d < 0 || d >= topo.dart_count() || owner[d] != -1)
          throw std::runtime_error("boundary walks do not partition the strand-sides");
        owner[d] = i;
      }
  for (int d = 0; d < topo.dart_count(); ++d)
    if (owner[d] == -1) throw std::runtime_error("boundary walks do not cover every strand-side");
  return owner;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Old arcs covered by each new arc, per curve, given which old stop
/// positions survive.  A curve whose stops all vanish becomes a marker curve
/// whose single loop arc covers the entire old curve.
struct ArcCover {
  std::vector<std::vector<int>> covered;  // new arc index -> old arc indices (same direction)

  static ArcCover build(const Topology& old_topo, const Topology& new_topo,
                        const std::vector<std::vector<int>>& kept_positions,
                        const std::vector<int>& old_curve_of_new) {
    ArcCover cover;
    cover.covered.resize(new_topo.arc_count);
    for (int nc = 0; nc < static_cast<int>(kept_positions.size()); ++nc) {
      const int oc = old_curve_of_new[nc];
      const int old_arcs = old_topo.arcs_per_curve[oc];
      const auto& kept = kept_positions[nc];
      if (kept.empty()) {
        auto& list = cover.covered[new_topo.arc_base[nc]];
        for (int p = 0; p < old_arcs; ++p) list.push_back(old_topo.arc_base[oc] + p);
        continue;
      }
      for (int t = 0; t < static_cast<int>(kept.size()); ++t) {
        auto& list = cover.covered[new_topo.arc_base[nc] + t];
        int p = kept[t];
        const int stop = kept[(t + 1) % kept.size()];
        do {
          list.push_back(old_topo.arc_base[oc] + p);
          p = (p + 1) % old_arcs;
        } while (p != stop);
      }
    }
    return cover;
  }
};

/// Assign freshly traced orbits to merged old-region groups and assemble the
/// region list.  `excluded` marks old darts whose side regions were destroyed
/// by the surgery (the removed bigon's own boundary); every orbit must still
/// contain a reliable dart, and all reliable darts of one orbit must agree.
inline void assemble_regions(Arrangement& out, const Arrangement& old_arr, const Topology& old_topo,
                             const std::vector<int>& old_region_of, UnionFind& uf,
                             const std::vector<int>& chi_delta, const ArcCover& cover,
                             const std::unordered_set<int>& excluded) {
  Topology new_topo = analyze(out);
  auto orbits = new_topo.orbits();

  const int old_region_count = static_cast<int>(old_arr.regions.size());
  std::vector<std::vector<std::vector<int>>> group_walks(old_region_count);
  for (auto& orbit : orbits) {
    int group = -1;
    for (int d : orbit) {
      const bool backward = dart_backward(d);
      for (int old_arc : cover.covered[arc_of_dart(d)]) {
        int old_dart = dart_of(old_arc, backward);
        if (excluded.count(old_dart)) continue;
        int g = uf.find(old_region_of[old_dart]);
        if (group == -1) group = g;
        if (group != g) throw std::logic_error("surgery: boundary walk spans two merged regions");
      }
    }
    if (group == -1) throw std::logic_error("surgery: boundary walk with no surviving reference dart");
    group_walks[group].push_back(std::move(orbit));
  }

  std::vector<long long> chi_sum(old_region_count, 0), punct_sum(old_region_count, 0);
  std::vector<char> has_member(old_region_count, 0), boundary(old_region_count, 0);
  std::vector<int> first_member(old_region_count, old_region_count);
  for (int r = 0; r < old_region_count; ++r) {
    int g = uf.find(r);
    chi_sum[g] += old_arr.regions[r].chi;
    punct_sum[g] += old_arr.regions[r].punctures;
    has_member[g] = 1;
    boundary[g] |= old_arr.regions[r].boundary ? 1 : 0;
    first_member[g] = std::min(first_member[g], r);
  }

  std::vector<int> roots;
  for (int g = 0; g < old_region_count; ++g)
    if (has_member[g] && uf.find(g) == g) roots.push_back(g);
  std::sort(roots.begin(), roots.end(), [&](int a, int b) { return first_member[a] < first_member[b]; });

  out.regions.clear();
  for (int g : roots) {
    if (group_walks[g].empty()) throw std::logic_error("surgery: merged region lost its boundary");
    Region r;
    r.chi = static_cast<int>(chi_sum[g] + chi_delta[g]);
    r.punctures = static_cast<int>(punct_sum[g]);
    r.boundary = boundary[g] != 0;
    r.walks = std::move(group_walks[g]);
    out.regions.push_back(std::move(r));
  }

  int sum_chi = 0, total_punct = 0;
  for (const Region& r : out.regions) { sum_chi += r.chi; total_punct += r.punctures; }
  if (out.vertex_count() - out.edge_count() + sum_chi != out.expected_chi())
    throw std::logic_error("surgery: Euler identity broken by region merge");
  if (total_punct != out.surface.punctures)
    throw std::logic_error("surgery: puncture count not preserved");
}

}  // namespace detail

/// Sub-arrangement spanned by the given curves (ascending old indices become
/// the new indices).  Crossings with a dropped curve dissolve; complementary
/// regions merge with Euler characteristics and puncture counts aggregated so
/// the Euler identity still holds.
inline Arrangement restrict_to(const Arrangement& arr, const std::set<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("restrict_to: empty curve subset");
  for (int c : keep)
    if (c < 0 || c >= static_cast<int>(arr.curves.size()))
      throw std::invalid_argument("restrict_to: unknown curve id " + std::to_string(c));
  if (static_cast<int>(keep.size()) == static_cast<int>(arr.curves.size())) return arr;

  Topology old_topo = analyze(arr);
  std::vector<int> old_region_of = region_of_dart_map(arr, old_topo);

  std::vector<int> old_of_new(keep.begin(), keep.end());
  std::vector<int> new_of_old(arr.curves.size(), -1);
  for (int nc = 0; nc < static_cast<int>(old_of_new.size()); ++nc) new_of_old[old_of_new[nc]] = nc;

  Arrangement out;
  out.surface = arr.surface;
  out.boundary_circles = arr.boundary_circles;
  out.curves.resize(old_of_new.size());

  std::vector<std::vector<int>> kept_positions(old_of_new.size());
  std::vector<char> crossing_kept(arr.crossings.size(), 0);
  for (int xi = 0; xi < static_cast<int>(arr.crossings.size()); ++xi) {
    const Crossing& x = arr.crossings[xi];
    crossing_kept[xi] = new_of_old[x.passages[0].first] != -1 && new_of_old[x.passages[1].first] != -1;
  }
  for (int nc = 0; nc < static_cast<int>(old_of_new.size()); ++nc) {
    const int oc = old_of_new[nc];
    for (int t = 0; t < static_cast<int>(arr.curves[oc].size()); ++t) {
      int xi = old_topo.crossing_index_by_id.at(arr.curves[oc][t]);
      if (!crossing_kept[xi]) continue;
      kept_positions[nc].push_back(t);
      out.curves[nc].push_back(arr.curves[oc][t]);
    }
  }
  for (int xi = 0; xi < static_cast<int>(arr.crossings.size()); ++xi) {
    if (!crossing_kept[xi]) continue;
    Crossing x = arr.crossings[xi];
    for (auto& [c, pos] : x.passages) {
      int nc = new_of_old[c];
      const auto& kp = kept_positions[nc];
      pos = static_cast<int>(std::lower_bound(kp.begin(), kp.end(), pos) - kp.begin());
      c = nc;
    }
    out.crossings.push_back(x);
  }

  // Merge regions across every arc of a dropped curve; crossings interior to
  // the dropped part (both strands dropped) and markers of dropped curves
  // each restore one vertex's worth of Euler characteristic.
  detail::UnionFind uf(static_cast<int>(arr.regions.size()));
  std::vector<int> chi_delta(arr.regions.size(), 0);
  for (int oc = 0; oc < static_cast<int>(arr.curves.size()); ++oc) {
    if (new_of_old[oc] != -1) continue;
    for (int p = 0; p < old_topo.arcs_per_curve[oc]; ++p) {
      int fwd = dart_of(old_topo.arc_base[oc] + p, false);
      uf.unite(old_region_of[fwd], old_region_of[dart_reverse(fwd)]);
    }
    if (arr.curves[oc].empty()) {  // dropped marker vertex is interior
      int fwd = dart_of(old_topo.arc_base[oc], false);
      ++chi_delta[old_region_of[fwd]];  // reattributed to the root below
    }
  }
  for (int xi = 0; xi < static_cast<int>(arr.crossings.size()); ++xi) {
    const Crossing& x = arr.crossings[xi];
    if (new_of_old[x.passages[0].first] == -1 && new_of_old[x.passages[1].first] == -1) {
      const auto [c, pos] = x.passages[0];
      int fwd = old_topo.dart(c, pos, false);
      ++chi_delta[old_region_of[fwd]];
    }
  }
  for (int oc = 0; oc < static_cast<int>(arr.curves.size()); ++oc) {
    if (new_of_old[oc] != -1) continue;
    for (int p = 0; p < old_topo.arcs_per_curve[oc]; ++p) {
      int fwd = dart_of(old_topo.arc_base[oc] + p, false);
      --chi_delta[old_region_of[fwd]];
    }
  }
  // Move the accumulated deltas onto group roots.
  {
    std::vector<int> root_delta(arr.regions.size(), 0);
    for (int r = 0; r < static_cast<int>(arr.regions.size()); ++r) root_delta[uf.find(r)] += chi_delta[r];
    chi_delta = std::move(root_delta);
  }

  Topology new_topo_probe;  // built inside assemble_regions; cover needs arc numbering first
  {
    std::vector<std::string> errs;
    if (!detail::build_topology(out, new_topo_probe, &errs))
      throw std::logic_error("restrict_to: produced malformed skeleton: " + (errs.empty() ? "" : errs.front()));
  }
  auto cover = detail::ArcCover::build(old_topo, new_topo_probe, kept_positions, old_of_new);
  detail::assemble_regions(out, arr, old_topo, old_region_of, uf, chi_delta, cover, {});
  return out;
}

inline Arrangement restrict_to(const Arrangement& arr, std::initializer_list<int> keep) {
  return restrict_to(arr, std::set<int>(keep));
}

/// Index of a region that is an empty bigon: a disk with no puncture whose
/// boundary is one arc of each of two distinct curves meeting at two distinct
/// crossings.
inline std::optional<int> find_empty_bigon(const Arrangement& arr, const Topology& topo) {
  for (int i = 0; i < static_cast<int>(arr.regions.size()); ++i) {
    const Region& r = arr.regions[i];
    if (r.chi != 1 || r.punctures != 0 || r.walks.size() != 1) continue;
    const auto& w = r.walks.front();
    if (w.size() != 2) continue;
    int c0 = topo.curve_of_dart(w[0]), c1 = topo.curve_of_dart(w[1]);
    if (c0 == c1) continue;
    // Heads of the two darts are the bigon's corner crossings.
    auto head_crossing = [&](int d) {
      int arc = arc_of_dart(d);
      int c = topo.curve_of_arc(arc);
      int t = topo.arc_pos(arc);
      int len = static_cast<int>(arr.curves[c].size());
      int stop = dart_backward(d) ? t : (t + 1) % len;
      return arr.curves[c][stop];
    };
    if (head_crossing(w[0]) == head_crossing(w[1])) continue;
    return i;
  }
  return std::nullopt;
}

/// Remove an empty bigon: isotope one curve across it, cancelling the two
/// corner crossings.  The bigon is absorbed by the region across its first
/// arc (an empty disk glued along one arc changes nothing), and the two
/// regions at the opposite corners are joined by the strip the moved strand
/// vacates (one Euler unit).  Total crossings drop by exactly 2.
inline Arrangement remove_bigon(const Arrangement& arr, int region_index) {
  Topology old_topo = analyze(arr);
  std::vector<int> old_region_of = region_of_dart_map(arr, old_topo);

  const Region& bigon = arr.regions.at(region_index);
  if (bigon.chi != 1 || bigon.punctures != 0 || bigon.walks.size() != 1 || bigon.walks.front().size() != 2)
    throw std::invalid_argument("remove_bigon: region is not an empty bigon");
  const int d1 = bigon.walks.front()[0], d2 = bigon.walks.front()[1];
  if (old_topo.phi(d1) != d2 || old_topo.phi(d2) != d1)
    throw std::invalid_argument("remove_bigon: bigon walk is not corner-consistent");

  auto head_crossing_index = [&](int d) {
    int arc = arc_of_dart(d);
    int c = old_topo.curve_of_arc(arc);
    int t = old_topo.arc_pos(arc);
    int len = static_cast<int>(arr.curves[c].size());
    int stop_pos = dart_backward(d) ? t : (t + 1) % len;
    return old_topo.crossing_index_by_id.at(arr.curves[c][stop_pos]);
  };
  const int cx = head_crossing_index(d1), cy = head_crossing_index(d2);
  if (cx == cy) throw std::invalid_argument("remove_bigon: bigon corners coincide");

  detail::UnionFind uf(static_cast<int>(arr.regions.size()));
  std::vector<int> chi_delta(arr.regions.size(), 0);

  // Absorb the bigon into the region across d1's arc.
  const int p_region = old_region_of[dart_reverse(d1)];
  // Opposite-corner regions at the two cancelled crossings.
  const int o1 = old_region_of[old_topo.sigma_next[old_topo.sigma_next[d2]]];
  const int o2 = old_region_of[old_topo.sigma_next[old_topo.sigma_next[d1]]];
  uf.unite(o1, o2);
  --chi_delta[uf.find(o1)];

  Arrangement out;
  out.surface = arr.surface;
  out.boundary_circles = arr.boundary_circles;
  out.curves.resize(arr.curves.size());
  std::vector<std::vector<int>> kept_positions(arr.curves.size());
  std::vector<int> old_of_new(arr.curves.size());
  std::iota(old_of_new.begin(), old_of_new.end(), 0);
  const int removed_id_x = arr.crossings[cx].id, removed_id_y = arr.crossings[cy].id;
  for (int c = 0; c < static_cast<int>(arr.curves.size()); ++c) {
    for (int t = 0; t < static_cast<int>(arr.curves[c].size()); ++t) {
      int id = arr.curves[c][t];
      if (id == removed_id_x || id == removed_id_y) continue;
      kept_positions[c].push_back(t);
      out.curves[c].push_back(id);
    }
  }
  for (int xi = 0; xi < static_cast<int>(arr.crossings.size()); ++xi) {
    if (xi == cx || xi == cy) continue;
    Crossing x = arr.crossings[xi];
    for (auto& [c, pos] : x.passages) {
      const auto& kp = kept_positions[c];
      pos = static_cast<int>(std::lower_bound(kp.begin(), kp.end(), pos) - kp.begin());
    }
    out.crossings.push_back(x);
  }

  // The bigon joins P's group as an ordinary member (chi 1, no punctures)
  // together with the one-arc gluing correction, so its net contribution is
  // zero.
  uf.unite(region_index, p_region);
  --chi_delta[uf.find(p_region)];
  {
    std::vector<int> root_delta(arr.regions.size(), 0);
    for (int r = 0; r < static_cast<int>(arr.regions.size()); ++r) root_delta[uf.find(r)] += chi_delta[r];
    chi_delta = std::move(root_delta);
  }

  Topology new_topo_probe;
  {
    std::vector<std::string> errs;
    if (!detail::build_topology(out, new_topo_probe, &errs))
      throw std::logic_error("remove_bigon: produced malformed skeleton: " + (errs.empty() ? "" : errs.front()));
  }
  auto cover = detail::ArcCover::build(old_topo, new_topo_probe, kept_positions, old_of_new);
  std::unordered_set<int> excluded = {d1, dart_reverse(d1), d2, dart_reverse(d2)};
  detail::assemble_regions(out, arr, old_topo, old_region_of, uf, chi_delta, cover, excluded);
  return out;
}

/// Repeatedly remove empty bigons until none remain.  Each step cancels
/// exactly two crossings, so this terminates within crossings/2 steps.
inline Arrangement reduce_bigons(Arrangement arr, int* steps = nullptr) {
  int count = 0;
  for (;;) {
    Topology topo = analyze(arr);
    auto bigon = find_empty_bigon(arr, topo);
    if (!bigon) break;
    const int before = static_cast<int>(arr.crossings.size());
    arr = remove_bigon(arr, *bigon);
    if (static_cast<int>(arr.crossings.size()) != before - 2)
      throw std::logic_error("bigon removal must cancel exactly two crossings");
    ++count;
  }
  if (steps) *steps = count;
  return arr;
}

}  // namespace fillset
