#pragma once

#include <string>

#include "asl/arc_system.hpp"

namespace asl {

// JSON document, version tag "asl-1".  Cycles are emitted at their least
// rotation and interior labels sorted, so equal systems write equal bytes.
std::string write_presentation(const SplitPresentation& sp);

// Parses the same document shape.  Structural problems throw ParseError; a
// version tag other than "asl-1" throws SchemaVersionMismatch.  Semantic
// soundness stays validate()'s job.
SplitPresentation read_presentation(const std::string& text);

// Dual graph in DOT: a node per piece labeled by its class, an edge per arc
// joining the two pieces its sides lie on, tagged "id: u-v".
std::string export_dot(const SplitPresentation& sp);

}  // namespace asl
