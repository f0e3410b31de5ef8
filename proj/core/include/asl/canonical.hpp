#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "asl/arc_system.hpp"

namespace asl {

// PMod: labels 1..m are fixed.  Mod: a global label permutation is also
// quotiented out; only available when every distinguished point is decorated.
enum class EquivMode { PMod, Mod };

struct CanonicalCode {
  std::vector<std::uint8_t> bytes;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  std::string hex() const;
};

// Invariant under arc renaming and reorientation, piece and cycle reordering,
// and cycle rotation; never under cycle reversal, so the two orientations of
// a chiral gluing stay distinct.  Equal codes reconstruct equal presentations
// up to exactly those moves (plus a label permutation in Mod mode).
CanonicalCode canonical_code(const SplitPresentation& sp, EquivMode mode);

}  // namespace asl
