#pragma once

#include "asl/arc_system.hpp"

namespace asl {

// dim A(Delta) = 6g - 7 + 2s + m.
int arc_complex_dim(const SurfaceSpec& spec);

// Dimension of the spine: 4g - 4 + s + m, one lower when m = s.
int spine_dim(const SurfaceSpec& spec);

// The dimension the spine was originally announced with: 4g - 5 + s + m.
// Agrees with spine_dim exactly when m = s, else runs one short.
int harer_claimed_dim(const SurfaceSpec& spec);

// Smallest rank of a filling system: 2g + s - 3, one higher when m = s.
int min_filling_rank(const SurfaceSpec& spec);

// True when every non-filling system sits at least two ranks below the top
// of the arc complex, which happens exactly for m = 1: a lone label can never
// be stranded, while for m >= 2 a maximal system on the other m-1 labels
// leaves label m free at rank (6g-7+2s+m) - 1.
bool nonfilling_codim2(const SurfaceSpec& spec);

struct MaximalPieceCounts {
  int arcs = 0;       // E = 6g - 6 + 2s + m
  int triangles = 0;  // t = 4g - 4 + s + m
  int monogons = 0;   // s - m
};

MaximalPieceCounts maximal_piece_counts(const SurfaceSpec& spec);

// Virtual cohomological dimension of the pure mapping class group of a genus
// g surface with s punctures; throws OutOfTable outside the four tabulated
// cases.
int vcd_pmod(int genus, int punctures);

// Geometric dimension; equals the vcd whenever s >= 1 and 2g + s > 2.
int gd_pmod(int genus, int punctures);

}  // namespace asl
