#pragma once

#include <stdexcept>

namespace fillset {

/// Genus and puncture count of the ambient surface.  The Euler characteristic
/// is always derived, never stored.
struct SurfaceSig {
  int genus = 0;
  int punctures = 0;

  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

inline SurfaceSig make_surface(int genus, int punctures) {
  if (genus < 0 || punctures < 0)
    throw std::invalid_argument("surface signature requires genus >= 0 and punctures >= 0");
  return SurfaceSig{genus, punctures};
}

/// chi(S) = 2 - 2g - n.
inline int euler_char(const SurfaceSig& s) { return 2 - 2 * s.genus - s.punctures; }

}  // namespace fillset
