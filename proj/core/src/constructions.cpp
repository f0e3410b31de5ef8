#include "asl/constructions.hpp"

#include <algorithm>
#include <utility>

namespace asl {

namespace {

int fresh_arc_id(const SplitPresentation& sp) {
  int top = 0;
  for (const auto& a : sp.arcs) top = std::max(top, a.id);
  return top + 1;
}

int corner_label(const SplitPresentation& sp, const Piece& piece, int pos) {
  return side_start_label(sp, piece.cycles[0].sides[pos]);
}

void require_disc(const Piece& piece) {
  if (piece.genus != 0 || piece.cycles.size() != 1)
    throw Error(Errc::Precondition, "this surgery needs a disc piece");
}

// Chord between corners posA < posB of a disc piece.  The empty fragment of
// sides posA..posB-1 replaces the piece; the rest, keeping all punctures and
// interior points, is appended last.
SplitPresentation chord_split(const SplitPresentation& sp, int piece_index, int posA, int posB) {
  const Piece& old = sp.pieces[piece_index];
  require_disc(old);
  const auto& sides = old.cycles[0].sides;
  int len = static_cast<int>(sides.size());
  int id = fresh_arc_id(sp);
  int u = corner_label(sp, old, posA);
  int v = corner_label(sp, old, posB);

  SplitPresentation out = sp;
  out.arcs.push_back({id, u, v});

  Piece cut;
  BoundaryCycle c1;
  for (int k = posA; k < posB; ++k) c1.sides.push_back(sides[k]);
  c1.sides.push_back({id, Dir::Backward});
  cut.cycles.push_back(std::move(c1));

  Piece rest;
  rest.punctures = old.punctures;
  rest.interior_marked = old.interior_marked;
  BoundaryCycle c2;
  c2.sides.push_back({id, Dir::Forward});
  for (int k = posB; k != posA; k = (k + 1) % len) c2.sides.push_back(sides[k]);
  rest.cycles.push_back(std::move(c2));

  out.pieces[piece_index] = std::move(cut);
  out.pieces.push_back(std::move(rest));
  return out;
}

// Arc from the vertex at corner pos to interior point q: the disc keeps its
// index, its cycle gaining the spike [new+ new-] at that corner.
SplitPresentation attach_interior_point(const SplitPresentation& sp, int piece_index, int pos,
                                        int q) {
  const Piece& old = sp.pieces[piece_index];
  require_disc(old);
  int id = fresh_arc_id(sp);
  int u = corner_label(sp, old, pos);

  SplitPresentation out = sp;
  out.arcs.push_back({id, u, q});
  Piece& piece = out.pieces[piece_index];
  auto it = std::find(piece.interior_marked.begin(), piece.interior_marked.end(), q);
  if (it == piece.interior_marked.end())
    throw Error(Errc::Precondition, "label " + std::to_string(q) + " is not interior here");
  piece.interior_marked.erase(it);
  auto& sides = piece.cycles[0].sides;
  sides.insert(sides.begin() + pos, {Side{id, Dir::Forward}, Side{id, Dir::Backward}});
  return out;
}

// Loop at the vertex of corner pos ringing off one puncture: the host keeps
// its index and gains the loop's outer side; a once-punctured monogon is
// appended last.
SplitPresentation split_off_punctured_monogon(const SplitPresentation& sp, int piece_index,
                                              int pos) {
  const Piece& old = sp.pieces[piece_index];
  require_disc(old);
  if (old.punctures < 1) throw Error(Errc::Precondition, "no puncture to ring off");
  int id = fresh_arc_id(sp);
  int u = corner_label(sp, old, pos);

  SplitPresentation out = sp;
  out.arcs.push_back({id, u, u});
  Piece& host = out.pieces[piece_index];
  --host.punctures;
  auto& sides = host.cycles[0].sides;
  sides.insert(sides.begin() + pos, Side{id, Dir::Forward});

  Piece mono;
  mono.punctures = 1;
  mono.cycles.push_back({{Side{id, Dir::Backward}}});
  out.pieces.push_back(std::move(mono));
  return out;
}

// 2g loops at label 1 cutting the surface into one 4g-gon, boundary word
// a1 b1 a1' b1' ... , holding every other point of the spec.
SplitPresentation polygon_base(const SurfaceSpec& spec) {
  SplitPresentation sp;
  sp.spec = spec;
  Piece poly;
  poly.punctures = spec.punctures();
  for (int q = 2; q <= spec.decorated; ++q) poly.interior_marked.push_back(q);
  BoundaryCycle cyc;
  for (int i = 0; i < spec.genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    sp.arcs.push_back({a, 1, 1});
    sp.arcs.push_back({b, 1, 1});
    cyc.sides.push_back({a, Dir::Forward});
    cyc.sides.push_back({b, Dir::Forward});
    cyc.sides.push_back({a, Dir::Backward});
    cyc.sides.push_back({b, Dir::Backward});
  }
  poly.cycles.push_back(std::move(cyc));
  sp.pieces.push_back(std::move(poly));
  return sp;
}

// One loop at label 1 ringing off one puncture of the sphere; the outside
// disc holds the other points.
SplitPresentation loop_base(const SurfaceSpec& spec) {
  SplitPresentation sp;
  sp.spec = spec;
  sp.arcs.push_back({1, 1, 1});
  Piece inside;
  inside.punctures = 1;
  inside.cycles.push_back({{Side{1, Dir::Forward}}});
  Piece outside;
  outside.punctures = spec.punctures() - 1;
  for (int q = 2; q <= spec.decorated; ++q) outside.interior_marked.push_back(q);
  outside.cycles.push_back({{Side{1, Dir::Backward}}});
  sp.pieces.push_back(std::move(inside));
  sp.pieces.push_back(std::move(outside));
  return sp;
}

// One arc from label 1 to label 2 slitting the sphere open into a single
// two-cornered disc around everything else.
SplitPresentation slit_base(const SurfaceSpec& spec) {
  SplitPresentation sp;
  sp.spec = spec;
  sp.arcs.push_back({1, 1, 2});
  Piece disc;
  disc.punctures = spec.punctures();
  for (int q = 3; q <= spec.decorated; ++q) disc.interior_marked.push_back(q);
  disc.cycles.push_back({{Side{1, Dir::Forward}, Side{1, Dir::Backward}}});
  sp.pieces.push_back(std::move(disc));
  return sp;
}

// Circuit through labels 1, 2, 3 cutting the sphere into two triangles; the
// first one holds everything else.
SplitPresentation circuit_base(const SurfaceSpec& spec) {
  SplitPresentation sp;
  sp.spec = spec;
  sp.arcs.push_back({1, 1, 2});
  sp.arcs.push_back({2, 2, 3});
  sp.arcs.push_back({3, 3, 1});
  Piece in;
  in.punctures = spec.punctures();
  for (int q = 4; q <= spec.decorated; ++q) in.interior_marked.push_back(q);
  in.cycles.push_back(
      {{Side{1, Dir::Forward}, Side{2, Dir::Forward}, Side{3, Dir::Forward}}});
  Piece out;
  out.cycles.push_back(
      {{Side{3, Dir::Backward}, Side{2, Dir::Backward}, Side{1, Dir::Backward}}});
  sp.pieces.push_back(std::move(in));
  sp.pieces.push_back(std::move(out));
  return sp;
}

int side_count_of(const SplitPresentation& sp, int piece_index) {
  return static_cast<int>(sp.pieces[piece_index].cycles[0].sides.size());
}

}  // namespace

SplitPresentation subdivide_triangle(const SplitPresentation& sp, int piece_index) {
  if (piece_index < 0 || piece_index >= static_cast<int>(sp.pieces.size()))
    throw Error(Errc::NotASubdividableTriangle, "no piece at index " + std::to_string(piece_index));
  {
    const Piece& piece = sp.pieces[piece_index];
    if (piece.genus != 0 || piece.cycles.size() != 1 || piece.cycles[0].sides.size() != 3)
      throw Error(Errc::NotASubdividableTriangle, "piece is not a 3-cornered disc");
  }

  SplitPresentation cur = sp;
  int at = piece_index;
  // Cone each interior point to the three corners: 3 arcs, 3 triangles.
  while (!cur.pieces[at].interior_marked.empty()) {
    int q = cur.pieces[at].interior_marked.front();
    cur = attach_interior_point(cur, at, 0, q);
    cur = chord_split(cur, at, 1, 3);
    at = static_cast<int>(cur.pieces.size()) - 1;
    cur = chord_split(cur, at, 0, 2);
    at = static_cast<int>(cur.pieces.size()) - 1;
  }
  // Ring each puncture off behind a loop: 2 arcs, a monogon and two triangles.
  while (cur.pieces[at].punctures > 0) {
    cur = split_off_punctured_monogon(cur, at, 0);
    cur = chord_split(cur, at, 1, 3);
    at = static_cast<int>(cur.pieces.size()) - 1;
  }
  return cur;
}

SplitPresentation explicit_maximal(const SurfaceSpec& spec) {
  require_valid(spec);
  if (spec.genus >= 1) {
    SplitPresentation sp = polygon_base(spec);
    int at = 0;
    while (side_count_of(sp, at) > 3) {
      sp = chord_split(sp, at, 0, 2);
      at = static_cast<int>(sp.pieces.size()) - 1;
    }
    return subdivide_triangle(sp, at);
  }
  int m = spec.decorated, n = spec.punctures();
  if (m == 1) {
    SplitPresentation sp = loop_base(spec);
    if (n == 2) return sp;
    sp = split_off_punctured_monogon(sp, 1, 0);
    sp = split_off_punctured_monogon(sp, 1, 0);
    return subdivide_triangle(sp, 1);
  }
  if (m == 2) {
    SplitPresentation sp = slit_base(spec);
    sp = split_off_punctured_monogon(sp, 0, 0);
    return subdivide_triangle(sp, 0);
  }
  return subdivide_triangle(circuit_base(spec), 0);
}

ChainCertificate example_chain(int genus) {
  if (genus < 1) throw Error(Errc::Precondition, "the chain construction needs genus >= 1");
  SurfaceSpec spec{genus, 2, 1};
  ChainCertificate cert;
  SplitPresentation sp = polygon_base(spec);
  cert.steps.push_back(sp);
  int at = 0;
  while (side_count_of(sp, at) > 3) {
    sp = chord_split(sp, at, 0, 2);
    at = static_cast<int>(sp.pieces.size()) - 1;
    cert.steps.push_back(sp);
  }
  sp = split_off_punctured_monogon(sp, at, 0);
  cert.steps.push_back(sp);
  sp = chord_split(sp, at, 1, 3);
  cert.steps.push_back(sp);
  return cert;
}

}  // namespace asl
