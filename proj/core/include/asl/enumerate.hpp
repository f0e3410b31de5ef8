#pragma once

#include <vector>

#include "asl/arc_system.hpp"
#include "asl/canonical.hpp"

namespace asl {

struct EnumOptions {
  int budget = 9;     // cap on the arc count E; larger jobs throw BudgetExceeded
  int threads = 1;    // worker count for the gluing search
  bool naive = false; // disable symmetry pruning (slow reference path)
};

// Canonical representatives, sorted by code.
struct MaximalClasses {
  std::vector<SplitPresentation> reps;
  std::vector<CanonicalCode> codes;
};

// All maximal systems up to the mode's equivalence: gluings of
// 4g-4+s+m triangles and s-m once-punctured monogons along E = 6g-6+2s+m
// arcs, with every bijective vertex labeling, deduplicated by code.
MaximalClasses enumerate_maximal(const SurfaceSpec& spec, EquivMode mode,
                                 const EnumOptions& opt = {});

// Downward closure of the maximal classes under single-arc deletion, keeping
// only systems that fill up.  Edges are covering relations (rank drops by 1).
struct FillingPoset {
  struct Node {
    SplitPresentation rep;
    CanonicalCode code;
    int rank = 0;
    std::vector<int> parents;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  std::vector<int> roots;  // the maximal classes

  int index_of(const CanonicalCode& code) const;  // -1 when absent
};

FillingPoset enumerate_filling(const SurfaceSpec& spec, EquivMode mode,
                               const EnumOptions& opt = {});

// Filling systems A_0 < A_1 < ... with ranks ascending by 1, each step a
// literal single-arc deletion of the next.
struct ChainCertificate {
  std::vector<SplitPresentation> steps;
};

struct SpineResult {
  int dim = 0;
  ChainCertificate witness;
};

// Longest chain in the filling poset, cross-checked against
// (max rank - min rank); the witness realizes it.
SpineResult spine_dimension_bruteforce(const SurfaceSpec& spec, EquivMode mode,
                                       const EnumOptions& opt = {});

// Minimum rank over the filling poset.  Every childless node is also checked
// to split the surface into once-punctured discs only (m < s), or to be a
// single empty disc (m = s).
int min_filling_rank_bruteforce(const SurfaceSpec& spec, EquivMode mode,
                                const EnumOptions& opt = {});

// Every valid system contained in some maximal one (filling or not),
// deduplicated by code and sorted by it.
std::vector<SplitPresentation> enumerate_all_subsystems(const SurfaceSpec& spec,
                                                        EquivMode mode,
                                                        const EnumOptions& opt = {});

// True iff every non-filling subsystem has rank at most dim A(Delta) - 2.
bool a_infinity_codimension_check(const SurfaceSpec& spec, EquivMode mode,
                                  const EnumOptions& opt = {});

}  // namespace asl
