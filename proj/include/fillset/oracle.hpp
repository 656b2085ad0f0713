#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fillset/bounds.hpp"
#include "fillset/surface.hpp"

namespace fillset {

/// Isotopy class of a simple closed curve on the closed torus: a primitive
/// vector up to sign, canonicalized to p > 0, or (0,1).
struct Slope {
  int p = 0;
  int q = 1;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  }
};

inline Slope make_slope(int p, int q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope: (0,0) is not a curve class");
  if (std::gcd(std::abs(p), std::abs(q)) != 1) throw std::invalid_argument("slope: components must be coprime");
  if (p < 0 || (p == 0 && q < 0)) { p = -p; q = -q; }
  return Slope{p, q};
}

/// Geometric intersection number of two slope classes.
inline int slope_intersection(const Slope& a, const Slope& b) {
  return std::abs(a.p * b.q - a.q * b.p);
}

/// All canonical slopes with |p|, |q| <= B, ascending.
inline std::vector<Slope> slopes_up_to(int bound) {
  if (bound < 1) throw std::invalid_argument("slopes_up_to: bound must be positive");
  std::vector<Slope> out;
  out.push_back(Slope{0, 1});
  for (int p = 1; p <= bound; ++p)
    for (int q = -bound; q <= bound; ++q)
      if (std::gcd(p, std::abs(q)) == 1) out.push_back(Slope{p, q});
  std::sort(out.begin(), out.end());
  return out;
}

struct KSystemResult {
  int size = 0;
  std::vector<Slope> witness;
};

/// Largest set of slope classes pairwise intersecting at most k times, over
/// the finite window |p|, |q| <= B.  Exhaustive branch and bound; the witness
/// is the lexicographically first maximum clique, so the result is
/// deterministic however branches are scheduled.
inline KSystemResult torus_max_ksystem(int k, int bound) {
  if (k < 0) throw std::invalid_argument("torus_max_ksystem: k must be non-negative");
  auto slopes = slopes_up_to(bound);
  const int n = static_cast<int>(slopes.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      adj[i][j] = adj[j][i] = slope_intersection(slopes[i], slopes[j]) <= k;

  KSystemResult best;
  std::vector<int> current;
  std::vector<int> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 0);

  auto extend = [&](auto&& self, const std::vector<int>& cand) -> void {
    if (static_cast<int>(current.size()) > best.size) {
      best.size = static_cast<int>(current.size());
      best.witness.clear();
      for (int v : current) best.witness.push_back(slopes[v]);
    }
    if (static_cast<int>(current.size() + cand.size()) <= best.size) return;
    for (size_t idx = 0; idx < cand.size(); ++idx) {
      if (static_cast<int>(current.size() + (cand.size() - idx)) <= best.size) return;
      int v = cand[idx];
      std::vector<int> next;
      for (size_t j = idx + 1; j < cand.size(); ++j)
        if (adj[v][cand[j]]) next.push_back(cand[j]);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  extend(extend, candidates);
  return best;
}

struct PartitionMax {
  std::int64_t value = 0;
  std::vector<std::int64_t> witness;
};

/// Exact integer maximum of (k-1) sum C(a_i,2) + k sum_{i<j} a_i a_j over
/// compositions a_1 + ... + a_M = N with a_i >= 0.  Guarded against
/// combinatorial blowup (N <= 40, M <= 6).
inline PartitionMax brute_partition_max(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) throw std::invalid_argument("brute_partition_max: N, M, k must be positive");
  if (n > 40 || m > 6) throw std::invalid_argument("brute_partition_max: guarded to N <= 40, M <= 6");
  PartitionMax best;
  best.value = -1;
  std::vector<std::int64_t> parts(m, 0);

  auto objective = [&]() {
    std::int64_t same = 0, cross = 0;
    for (int i = 0; i < m; ++i) same += parts[i] * (parts[i] - 1) / 2;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) cross += parts[i] * parts[j];
    return static_cast<std::int64_t>(k - 1) * same + static_cast<std::int64_t>(k) * cross;
  };
  auto recurse = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == m - 1) {
      parts[slot] = remaining;
      std::int64_t v = objective();
      if (v > best.value) {
        best.value = v;
        best.witness = parts;
      }
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      parts[slot] = a;
      self(self, slot + 1, remaining - a);
    }
  };
  recurse(recurse, 0, n);
  return best;
}

/// Parameters for the minimal-N rescans; only the fields a formula reads are
/// consulted.
struct MinNParams {
  SurfaceSig sig;
  int k = 0;
  int m_cap = 0;
};

/// Smallest N by linear scan from 1, cross-checking the closed-form searches
/// of the bounds module.  Errors out after 10^6 candidates.
inline std::int64_t brute_min_n(Formula formula, const MinNParams& params) {
  const std::int64_t abs_chi = -static_cast<std::int64_t>(euler_char(params.sig));
  switch (formula) {
    case Formula::EvenLower:
      if (params.k <= 0) throw std::invalid_argument("brute_min_n: k must be positive");
      return detail::smallest_satisfying([&](std::int64_t n) {
        return static_cast<std::int64_t>(params.k) * n * (n - 1) >= 2 * abs_chi;
      });
    case Formula::OddLower: {
      if (params.k <= 0 || params.m_cap <= 0)
        throw std::invalid_argument("brute_min_n: k and m_cap must be positive");
      // (k/2)N(N-1) - (N/2)(N/M - 1) >= |chi|, cleared of denominators by 2M.
      const std::int64_t k = params.k, m = params.m_cap;
      return detail::smallest_satisfying([&](std::int64_t n) {
        return k * m * n * (n - 1) - n * (n - m) >= 2 * m * abs_chi;
      });
    }
    case Formula::TorusK1:
      return detail::smallest_satisfying(
          [&](std::int64_t n) { return torus_k1_capacity(n) >= params.sig.punctures; });
    case Formula::SphereExact:
      return detail::smallest_satisfying([&](std::int64_t n) {
        return static_cast<std::int64_t>(params.k) * n * (n - 1) + 4 >= 2LL * params.sig.punctures;
      });
    case Formula::GenusWindow:
    case Formula::SystoleCount:
      throw std::invalid_argument("brute_min_n: formula has no minimal-N semantics");
  }
  throw std::invalid_argument("brute_min_n: unknown formula");
}

}  // namespace fillset
