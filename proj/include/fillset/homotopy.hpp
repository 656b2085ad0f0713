#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fillset/arrangement.hpp"
#include "fillset/surgery.hpp"

namespace fillset {

/// A curve is essential when it is not contractible and not puncture
/// parallel: no complementary component of the curve alone is a disk with at
/// most one puncture.
inline bool is_essential(const Arrangement& arr, int curve_id) {
  if (curve_id < 0 || curve_id >= static_cast<int>(arr.curves.size()))
    throw std::invalid_argument("is_essential: unknown curve id " + std::to_string(curve_id));
  Arrangement alone = restrict_to(arr, {curve_id});
  for (const Region& r : alone.regions)
    if (r.chi == 1 && r.punctures <= 1) return false;
  return true;
}

/// Bigon criterion on the two-curve sub-arrangement: remove empty bigons
/// until none remain; the curves are freely homotopic exactly when they end
/// up disjoint and cobound an annulus containing no puncture.  Sound only for
/// essential curves, hence the precondition.
inline bool are_homotopic(const Arrangement& arr, int curve_i, int curve_j) {
  if (curve_i == curve_j) throw std::invalid_argument("are_homotopic: need two distinct curves");
  if (!is_essential(arr, curve_i) || !is_essential(arr, curve_j))
    throw std::invalid_argument("are_homotopic: criterion requires essential curves");

  Arrangement pair = reduce_bigons(restrict_to(arr, {curve_i, curve_j}));
  if (!pair.crossings.empty()) return false;

  Topology topo = analyze(pair);
  for (const Region& r : pair.regions) {
    if (r.chi != 0 || r.punctures != 0 || r.walks.size() != 2) continue;
    std::set<int> curves_a, curves_b;
    for (int d : r.walks[0]) curves_a.insert(topo.curve_of_dart(d));
    for (int d : r.walks[1]) curves_b.insert(topo.curve_of_dart(d));
    if (curves_a.size() == 1 && curves_b.size() == 1 && curves_a != curves_b) return true;
  }
  return false;
}

/// Witnessed verdict for the k-filling property.
struct FillingCertificate {
  int k = 0;
  bool intersections_ok = false;      // (a) pairwise crossings <= k
  int max_intersections = 0;
  std::optional<std::pair<int, int>> worst_pair;
  bool all_essential = false;         // (b)
  std::vector<int> inessential;
  bool pairwise_non_homotopic = false;  // (c), evaluated over essential pairs
  std::vector<std::pair<int, int>> homotopic_pairs;
  bool complement_ok = false;         // (d) disks with at most one puncture
  std::vector<int> bad_regions;
  bool pass = false;
};

inline FillingCertificate verify_k_filling(const Arrangement& arr, int k) {
  if (k < 1) throw std::invalid_argument("verify_k_filling: k must be positive");
  FillingCertificate cert;
  cert.k = k;

  IntersectionMatrix m = intersection_matrix(arr);
  int wi = -1, wj = -1;
  cert.max_intersections = m.max_off_diagonal(&wi, &wj);
  cert.intersections_ok = cert.max_intersections <= k;
  if (!cert.intersections_ok) cert.worst_pair = {wi, wj};

  const int n = static_cast<int>(arr.curves.size());
  std::vector<char> essential(n, 0);
  for (int c = 0; c < n; ++c) {
    essential[c] = is_essential(arr, c);
    if (!essential[c]) cert.inessential.push_back(c);
  }
  cert.all_essential = cert.inessential.empty();

  cert.pairwise_non_homotopic = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!essential[i] || !essential[j]) continue;
      if (are_homotopic(arr, i, j)) {
        cert.pairwise_non_homotopic = false;
        cert.homotopic_pairs.push_back({i, j});
      }
    }

  cert.complement_ok = true;
  for (int r = 0; r < static_cast<int>(arr.regions.size()); ++r) {
    if (arr.regions[r].chi == 1 && arr.regions[r].punctures <= 1 && !arr.regions[r].boundary) continue;
    cert.complement_ok = false;
    cert.bad_regions.push_back(r);
  }

  cert.pass = cert.intersections_ok && cert.all_essential && cert.pairwise_non_homotopic && cert.complement_ok;
  return cert;
}

}  // namespace fillset
