#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "asl/arc_system.hpp"
#include "asl/canonical.hpp"

namespace asl::testing {

// Hand-built fixtures.  Each call returns a fresh copy.
SplitPresentation sphere_two_monogons();   // (0,3,1): one loop, two punctured discs
SplitPresentation torus_annulus();         // (1,1,1): one loop, single annular piece
SplitPresentation torus_square();          // (1,1,1): two loops, one square
SplitPresentation torus_two_triangles();   // (1,1,1): maximal, three loops
SplitPresentation theta_system();          // (0,3,3): maximal, three chords
SplitPresentation loop_and_chord();        // (0,3,3): rank 1, label 3 stranded in a monogon
SplitPresentation marked_bigon_chord();    // (0,3,3): one chord, bigon holding label 3
SplitPresentation two_empty_bigons();      // (0,3,3): invalid, one piece is an empty bigon
SplitPresentation chiral_nested_loops();   // (0,4,4): maximal, mirror lands in another class

// Rewrites everything a canonical code must be blind to: arc ids and
// orientations, arc order, piece order, cycle order, cycle rotations.
// With permute_labels also applies a bijection of the marked labels.
SplitPresentation scramble(const SplitPresentation& sp, std::mt19937_64& rng,
                           bool permute_labels = false);

// Brute-force isomorphism search, independent of canonical_code: tries every
// piece bijection, cycle matching with rotation, and consistent arc
// relabeling (plus label bijections in Mod mode).  Never reverses cycles.
bool isomorphic(const SplitPresentation& a, const SplitPresentation& b,
                EquivMode mode);

// Small valid systems of mixed rank, pooled across several surfaces.
const std::vector<SplitPresentation>& sample_pool();

}  // namespace asl::testing
