#pragma once

#include <utility>
#include <vector>

#include "asl/arc_system.hpp"

namespace asl {

// Removes one arc and merges or reshapes the pieces its two sides bounded:
// sides on distinct pieces merge them, sides on distinct cycles of one piece
// add a handle, sides on a single cycle split it.  A label that loses its
// last arc becomes an interior marked point of the affected piece.  Throws
// UnknownArc, and LastArc when only one arc remains.
SplitPresentation delete_arc(const SplitPresentation& sp, int arc_id);

// Every single-arc deletion, keyed by the deleted arc id, in arc order.
std::vector<std::pair<int, SplitPresentation>> all_deletions(const SplitPresentation& sp);

}  // namespace asl
