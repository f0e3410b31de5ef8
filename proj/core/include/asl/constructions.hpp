#pragma once

#include "asl/arc_system.hpp"
#include "asl/enumerate.hpp"

namespace asl {

// Splits a 3-cornered disc piece holding interior marked points and punctures
// into triangles and once-punctured monogons, adding 3 arcs per marked point
// and 2 per puncture.  Throws NotASubdividableTriangle on any other shape.
SplitPresentation subdivide_triangle(const SplitPresentation& sp, int piece_index);

// A maximal system built from scratch for any valid spec: rank 6g-7+2s+m.
SplitPresentation explicit_maximal(const SurfaceSpec& spec);

// For the surface (g, 2, 1): filling systems of ranks 2g-1 through 6g-2,
// each obtained from the previous one by adding a single arc.
ChainCertificate example_chain(int genus);

}  // namespace asl
