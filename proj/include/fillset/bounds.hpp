#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fillset/rational.hpp"
#include "fillset/surface.hpp"

namespace fillset {

enum class Formula { EvenLower, OddLower, TorusK1, GenusWindow, SystoleCount, SphereExact };

inline const char* formula_name(Formula f) {
  switch (f) {
    case Formula::EvenLower: return "EVEN_LOWER";
    case Formula::OddLower: return "ODD_LOWER";
    case Formula::TorusK1: return "TORUS_K1";
    case Formula::GenusWindow: return "GENUS_WINDOW";
    case Formula::SystoleCount: return "SYSTOLE_COUNT";
    case Formula::SphereExact: return "SPHERE_EXACT";
  }
  return "?";
}

/// Evaluated inequality: inputs, exact threshold, and the minimal integer
/// solution (or the real window for the genus bracket).
struct BoundReport {
  Formula formula = Formula::EvenLower;
  SurfaceSig sig;
  int k = 0;
  int m_cap = 0;
  Rational threshold;          // right-hand side in its exact form
  std::int64_t minimal_n = 0;  // smallest N satisfying the inequality
  double interval_lo = 0, interval_hi = 0;
  std::vector<std::int64_t> candidates;  // integers inside [interval_lo, interval_hi)
  std::vector<std::string> notes;
};

namespace detail {

inline std::int64_t smallest_satisfying(const std::function<bool(std::int64_t)>& pred,
                                        std::int64_t limit = 1'000'000) {
  for (std::int64_t n = 1; n <= limit; ++n)
    if (pred(n)) {
      if (n > 1 && pred(n - 1)) throw std::logic_error("minimal-N search: predicate not minimal");
      return n;
    }
  throw std::runtime_error("minimal-N search exhausted (no solution up to 10^6)");
}

}  // namespace detail

/// Smallest N with N(N-1) >= 2|chi|/k, for even k on a punctured surface of
/// negative Euler characteristic.
inline BoundReport min_filling_even(const SurfaceSig& sig, int k) {
  if (sig.punctures < 1) throw std::invalid_argument("min_filling_even: needs at least one puncture");
  if (euler_char(sig) >= 0) throw std::invalid_argument("min_filling_even: needs chi < 0");
  if (k <= 0 || k % 2 != 0) throw std::invalid_argument("min_filling_even: k must be even and positive");
  BoundReport r;
  r.formula = Formula::EvenLower;
  r.sig = sig;
  r.k = k;
  const std::int64_t abs_chi = -euler_char(sig);
  r.threshold = Rational(2 * abs_chi, k);
  r.minimal_n = detail::smallest_satisfying(
      [&](std::int64_t n) { return Rational(n * (n - 1)) >= r.threshold; });
  return r;
}

/// Smallest N with (k/2)N(N-1) - (N/2)(N/M - 1) >= |chi| for odd k; M is the
/// caller-supplied cap on the number of distinct closed-surface classes.
inline BoundReport min_filling_odd(const SurfaceSig& sig, int k, int m_cap) {
  if (sig.genus < 1 || sig.punctures < 1)
    throw std::invalid_argument("min_filling_odd: needs g >= 1 and n >= 1");
  if (k <= 0 || k % 2 == 0) throw std::invalid_argument("min_filling_odd: k must be odd and positive");
  if (m_cap < 1) throw std::invalid_argument("min_filling_odd: m_cap must be positive");
  BoundReport r;
  r.formula = Formula::OddLower;
  r.sig = sig;
  r.k = k;
  r.m_cap = m_cap;
  const std::int64_t abs_chi = -euler_char(sig);
  r.threshold = Rational(abs_chi);
  r.minimal_n = detail::smallest_satisfying([&](std::int64_t n) {
    Rational lhs = Rational(k, 2) * Rational(n * (n - 1)) -
                   Rational(n, 2) * (Rational(n, m_cap) - Rational(1));
    return lhs >= r.threshold;
  });
  return r;
}

/// Number of complementary regions a balanced triple of slope classes can
/// offer on the torus: N^2/3 when 3 | N, else (N^2-1)/3.
inline std::int64_t torus_k1_capacity(std::int64_t n_curves) {
  return n_curves % 3 == 0 ? n_curves * n_curves / 3 : (n_curves * n_curves - 1) / 3;
}

inline std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

/// Minimal N whose capacity covers n punctures on the torus with pairwise
/// single intersections.  Carries ceil(sqrt(3n)) and sqrt(3n+1) for
/// comparison, and flags the n where the literal sqrt(3n+1) bound fails.
inline BoundReport torus_k1_bound(int n) {
  if (n < 1) throw std::invalid_argument("torus_k1_bound: n must be positive");
  BoundReport r;
  r.formula = Formula::TorusK1;
  r.sig = SurfaceSig{1, n};
  r.k = 1;
  r.threshold = Rational(n);
  r.minimal_n = detail::smallest_satisfying([&](std::int64_t m) { return torus_k1_capacity(m) >= n; });
  std::int64_t s = isqrt(3LL * n);
  std::int64_t ceil_sqrt_3n = s * s == 3LL * n ? s : s + 1;
  r.notes.push_back("ceil(sqrt(3n)) = " + std::to_string(ceil_sqrt_3n));
  r.notes.push_back("sqrt(3n+1) = " + std::to_string(std::sqrt(3.0 * n + 1)));
  if (r.minimal_n * r.minimal_n > 3LL * n + 1)
    r.notes.push_back("exceeds literal sqrt(3n+1) bound");
  return r;
}

inline bool torus_k1_exceeds_sqrt_bound(const BoundReport& r) {
  return r.minimal_n * r.minimal_n > 3LL * r.sig.punctures + 1;
}

/// Real window [5/2 + r, 6 + r) with r = sqrt(1/4 + 2|chi|/k) bracketing the
/// size of the genus >= 2 construction, plus the integers inside it.  The
/// square root is evaluated in floating point; integer extraction uses an
/// outward guard of 2^-40 so candidates never flip on rounding.
inline BoundReport genus_window(const SurfaceSig& sig, int k) {
  if (sig.genus < 2 || sig.punctures < 1)
    throw std::invalid_argument("genus_window: needs g >= 2 and n >= 1");
  if (k <= 0 || k % 2 != 0) throw std::invalid_argument("genus_window: k must be even and positive");
  BoundReport r;
  r.formula = Formula::GenusWindow;
  r.sig = sig;
  r.k = k;
  const std::int64_t abs_chi = -euler_char(sig);
  r.threshold = Rational(1, 4) + Rational(2 * abs_chi, k);
  const double root = std::sqrt(r.threshold.to_double());
  r.interval_lo = 2.5 + root;
  r.interval_hi = 6.0 + root;
  const double guard = std::ldexp(1.0, -40);
  for (std::int64_t m = static_cast<std::int64_t>(std::floor(r.interval_lo)) - 1;
       m <= static_cast<std::int64_t>(std::ceil(r.interval_hi)) + 1; ++m)
    if (m + guard >= r.interval_lo && m < r.interval_hi + guard) r.candidates.push_back(m);
  r.minimal_n = r.candidates.empty() ? 0 : r.candidates.front();
  return r;
}

struct PairProductMax {
  std::int64_t value = 0;
  std::array<std::int64_t, 3> witness{};  // ascending balanced triple
};

/// Maximum of ab + bc + ca over non-negative integer triples with
/// a + b + c = N: N^2/3 when 3 | N, else (N^2 - 1)/3, at a balanced triple.
inline PairProductMax pair_product_max(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("pair_product_max: N must be positive");
  PairProductMax out;
  std::int64_t a = n / 3;
  switch (n % 3) {
    case 0: out.witness = {a, a, a}; break;
    case 1: out.witness = {a, a, a + 1}; break;
    default: out.witness = {a, a + 1, a + 1}; break;
  }
  const auto [x, y, z] = out.witness;
  out.value = x * y + y * z + z * x;
  if (out.value != (n % 3 == 0 ? n * n / 3 : (n * n - 1) / 3))
    throw std::logic_error("pair_product_max: closed form disagrees with witness");
  return out;
}

/// Closed-form maximum of (k-1) sum C(a_i,2) + k sum_{i<j} a_i a_j over real
/// a_i >= 0 summing to N with M parts: (k/2)N(N-1) - (N/2)(N/M - 1).
inline Rational odd_cap_value(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 1 || m < 1 || k < 1) throw std::invalid_argument("odd_cap_value: N, M, k must be positive");
  return Rational(k, 2) * Rational(n * (n - 1)) - Rational(n, 2) * (Rational(n, m) - Rational(1));
}

struct SystoleCountBound {
  double value = 0;       // (2*pi*(2g-1) + pi*(n-2)) / (4*ell)
  std::int64_t ceiling = 0;
  bool degenerate = false;  // numerator <= 0
};

/// Lower bound on the size of a filling set of systoles of length ell.
inline SystoleCountBound systole_count_lower(const SurfaceSig& sig, double ell) {
  if (!(ell > 0)) throw std::invalid_argument("systole_count_lower: ell must be positive");
  SystoleCountBound out;
  const std::int64_t coef = 4LL * sig.genus + sig.punctures - 4;  // numerator = pi * coef
  if (coef <= 0) {
    out.degenerate = true;
    return out;
  }
  const double pi = 3.14159265358979323846;
  out.value = pi * static_cast<double>(coef) / (4.0 * ell);
  out.ceiling = static_cast<std::int64_t>(std::ceil(out.value));
  return out;
}

/// Sphere construction size: smallest N whose k-fold pairwise pattern offers
/// at least n faces, with a note when n is hit exactly.
inline BoundReport sphere_exact_report(int n, int k) {
  if (n < 4) throw std::invalid_argument("sphere_exact_report: n must be at least 4");
  if (k <= 0 || k % 2 != 0) throw std::invalid_argument("sphere_exact_report: k must be even and positive");
  BoundReport r;
  r.formula = Formula::SphereExact;
  r.sig = SurfaceSig{0, n};
  r.k = k;
  r.threshold = Rational(2 * n - 4, k);
  r.minimal_n = detail::smallest_satisfying(
      [&](std::int64_t m) { return Rational(m * (m - 1)) >= r.threshold; });
  if (static_cast<std::int64_t>(k) * r.minimal_n * (r.minimal_n - 1) + 4 == 2LL * n)
    r.notes.push_back("exact: n = (k N(N-1) + 4)/2, one puncture per face");
  return r;
}

}  // namespace fillset
