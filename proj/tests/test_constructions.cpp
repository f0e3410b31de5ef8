#include <algorithm>
#include <set>

#include "asl/arc_system.hpp"
#include "asl/canonical.hpp"
#include "asl/constructions.hpp"
#include "asl/enumerate.hpp"
#include "asl/formulas.hpp"
#include "asl/surgery.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace asl;
using namespace asl::testing;

namespace {

// Marked triangle plus a punctured monogon on (0,4,3).
SplitPresentation marked_triangle_base() {
  SplitPresentation sp;
  sp.spec = {0, 4, 3};
  sp.arcs = {{1, 1, 1}, {2, 1, 2}};
  sp.pieces = {{0, 0, {3}, {{{{1, Dir::Forward}, {2, Dir::Forward}, {2, Dir::Backward}}}}},
               {0, 1, {}, {{{{1, Dir::Backward}}}}}};
  return sp;
}

}  // namespace

TEST_CASE("subdividing a marked triangle adds three arcs") {
  const SplitPresentation base = marked_triangle_base();
  REQUIRE(validate(base).valid);
  const SplitPresentation out = subdivide_triangle(base, 0);
  CHECK(validate(out).valid);
  CHECK(out.arcs.size() == base.arcs.size() + 3);
  CHECK(is_maximal(out));
  int triangles = 0;
  for (const Piece& p : out.pieces)
    triangles += classify_piece(p).kind == PieceKind::Triangle;
  CHECK(triangles == 3);
  const DerivedInvariants before = derive_invariants(base);
  const DerivedInvariants after = derive_invariants(out);
  CHECK(before.genus == after.genus);
  CHECK(before.punctures == after.punctures);
}

TEST_CASE("subdividing a punctured triangle adds two arcs") {
  SplitPresentation base = marked_triangle_base();
  base.spec = {0, 4, 2};
  base.pieces[0].interior_marked = {};
  base.pieces[0].punctures = 1;
  REQUIRE(validate(base).valid);
  const SplitPresentation out = subdivide_triangle(base, 0);
  CHECK(validate(out).valid);
  CHECK(out.arcs.size() == base.arcs.size() + 2);
  CHECK(is_maximal(out));
  int triangles = 0, monogons = 0;
  for (const Piece& p : out.pieces) {
    triangles += classify_piece(p).kind == PieceKind::Triangle;
    monogons += classify_piece(p).kind == PieceKind::OncePuncturedMonogon;
  }
  CHECK(triangles == 2);
  CHECK(monogons == 2);
}

TEST_CASE("subdividing an empty triangle is the identity") {
  const SplitPresentation theta = theta_system();
  CHECK(subdivide_triangle(theta, 0) == theta);
  CHECK(subdivide_triangle(theta, 1) == theta);
}

TEST_CASE("subdivision refuses non-triangles") {
  try {
    subdivide_triangle(marked_bigon_chord(), 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotASubdividableTriangle);
  }
  CHECK_THROWS_AS(subdivide_triangle(torus_annulus(), 0), Error);
  CHECK_THROWS_AS(subdivide_triangle(theta_system(), 5), Error);
}

TEST_CASE("the explicit maximal system meets every maximality measure") {
  for (int g = 0; g <= 2; ++g)
    for (int s = 1; s <= 4; ++s)
      for (int m = 1; m <= s; ++m) {
        if (2 * g + s <= 2) continue;
        const SurfaceSpec spec{g, s, m};
        CAPTURE(g);
        CAPTURE(s);
        CAPTURE(m);
        const SplitPresentation sp = explicit_maximal(spec);
        CHECK(validate(sp).valid);
        CHECK(is_maximal(sp));
        CHECK(fills_up(sp));
        CHECK(rank(sp) == arc_complex_dim(spec));
        const MaximalPieceCounts want = maximal_piece_counts(spec);
        CHECK(static_cast<int>(sp.arcs.size()) == want.arcs);
        int triangles = 0, monogons = 0;
        for (const Piece& p : sp.pieces) {
          const PieceKind kind = classify_piece(p).kind;
          triangles += kind == PieceKind::Triangle;
          monogons += kind == PieceKind::OncePuncturedMonogon;
          CHECK((kind == PieceKind::Triangle ||
                 kind == PieceKind::OncePuncturedMonogon));
        }
        CHECK(triangles == want.triangles);
        CHECK(monogons == want.monogons);
        const DerivedInvariants inv = derive_invariants(sp);
        CHECK(inv.genus == g);
        CHECK(inv.punctures == s - m);
      }
}

TEST_CASE("explicit maximal sizes on the named small surfaces") {
  CHECK(explicit_maximal({0, 3, 1}).arcs.size() == 1);
  CHECK(explicit_maximal({0, 3, 1}).pieces.size() == 2);
  CHECK(explicit_maximal({1, 1, 1}).arcs.size() == 3);
  CHECK(explicit_maximal({1, 1, 1}).pieces.size() == 2);
  CHECK(explicit_maximal({1, 2, 1}).arcs.size() == 5);
  CHECK(rank(explicit_maximal({1, 2, 1})) == 4);
}

TEST_CASE("explicit maximal systems are found by the enumerator") {
  for (SurfaceSpec spec : {SurfaceSpec{0, 3, 1}, SurfaceSpec{0, 3, 3},
                           SurfaceSpec{0, 4, 2}, SurfaceSpec{1, 1, 1},
                           SurfaceSpec{1, 2, 1}}) {
    const auto classes = enumerate_maximal(spec, EquivMode::PMod, {9, 4, false});
    const CanonicalCode code =
        canonical_code(explicit_maximal(spec), EquivMode::PMod);
    CHECK(std::count(classes.codes.begin(), classes.codes.end(), code) == 1);
  }
}

TEST_CASE("the demonstration chain climbs one arc at a time") {
  for (int g : {1, 2}) {
    CAPTURE(g);
    const ChainCertificate chain = example_chain(g);
    REQUIRE(chain.steps.size() == static_cast<size_t>(4 * g));
    for (size_t i = 0; i < chain.steps.size(); ++i) {
      const SplitPresentation& sp = chain.steps[i];
      CHECK(sp.spec.genus == g);
      CHECK(sp.spec.points == 2);
      CHECK(sp.spec.decorated == 1);
      CHECK(validate(sp).valid);
      CHECK(fills_up(sp));
      CHECK(rank(sp) == 2 * g - 1 + static_cast<int>(i));
    }
    CHECK(rank(chain.steps.back()) == 6 * g - 2);
    CHECK(is_maximal(chain.steps.back()));
    CHECK_FALSE(is_maximal(chain.steps.front()));
    for (size_t i = 0; i + 1 < chain.steps.size(); ++i) {
      const SplitPresentation& cur = chain.steps[i];
      const SplitPresentation& next = chain.steps[i + 1];
      std::set<int> small, big;
      for (const Arc& a : cur.arcs) small.insert(a.id);
      for (const Arc& a : next.arcs) big.insert(a.id);
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      std::vector<int> extra;
      std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                          std::back_inserter(extra));
      REQUIRE(extra.size() == 1);
      CHECK(normalized(delete_arc(next, extra[0])) == normalized(cur));
    }
  }
}
