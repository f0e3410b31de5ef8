#include "asl/surgery.hpp"

#include <algorithm>
#include <set>

namespace asl {

namespace {

struct Loc {
  int piece = -1;
  int cycle = -1;
  int pos = -1;
};

// Remaining sides of a cycle in cyclic order, starting just after `pos`.
std::vector<Side> cycle_without(const BoundaryCycle& c, int pos) {
  int len = static_cast<int>(c.sides.size());
  std::vector<Side> out;
  out.reserve(len - 1);
  for (int k = 1; k < len; ++k) out.push_back(c.sides[(pos + k) % len]);
  return out;
}

void push_if_nonempty(std::vector<BoundaryCycle>& cycles, std::vector<Side> sides) {
  if (!sides.empty()) cycles.push_back({std::move(sides)});
}

void merge_interior(std::vector<int>& into, const std::vector<int>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

}  // namespace

SplitPresentation delete_arc(const SplitPresentation& sp, int arc_id) {
  const Arc* arc = sp.find_arc(arc_id);
  if (!arc) throw Error(Errc::UnknownArc, "no arc with id " + std::to_string(arc_id));
  if (sp.arcs.size() < 2)
    throw Error(Errc::LastArc, "deleting the last arc would leave an empty system");

  std::vector<Loc> occ;
  for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p)
    for (int c = 0; c < static_cast<int>(sp.pieces[p].cycles.size()); ++c) {
      const auto& sides = sp.pieces[p].cycles[c].sides;
      for (int k = 0; k < static_cast<int>(sides.size()); ++k)
        if (sides[k].arc == arc_id) occ.push_back({p, c, k});
    }
  if (occ.size() != 2)
    throw Error(Errc::Precondition, "arc " + std::to_string(arc_id) + " has " +
                                        std::to_string(occ.size()) + " sides, expected 2");
  const Loc a = occ[0], b = occ[1];

  SplitPresentation out;
  out.spec = sp.spec;
  for (const auto& x : sp.arcs)
    if (x.id != arc_id) out.arcs.push_back(x);

  int affected = -1;
  if (a.piece != b.piece) {
    // Distinct pieces merge into one; the two host cycles splice end to end.
    const Piece& pa = sp.pieces[a.piece];
    const Piece& pb = sp.pieces[b.piece];
    Piece merged;
    merged.genus = pa.genus + pb.genus;
    merged.punctures = pa.punctures + pb.punctures;
    merged.interior_marked = pa.interior_marked;
    merge_interior(merged.interior_marked, pb.interior_marked);
    for (int c = 0; c < static_cast<int>(pa.cycles.size()); ++c)
      if (c != a.cycle) merged.cycles.push_back(pa.cycles[c]);
    for (int c = 0; c < static_cast<int>(pb.cycles.size()); ++c)
      if (c != b.cycle) merged.cycles.push_back(pb.cycles[c]);
    std::vector<Side> splice = cycle_without(pa.cycles[a.cycle], a.pos);
    std::vector<Side> tail = cycle_without(pb.cycles[b.cycle], b.pos);
    splice.insert(splice.end(), tail.begin(), tail.end());
    push_if_nonempty(merged.cycles, std::move(splice));

    int lo = std::min(a.piece, b.piece), hi = std::max(a.piece, b.piece);
    for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p) {
      if (p == lo) {
        affected = static_cast<int>(out.pieces.size());
        out.pieces.push_back(merged);
      } else if (p != hi) {
        out.pieces.push_back(sp.pieces[p]);
      }
    }
  } else if (a.cycle != b.cycle) {
    // Two boundary circles of one piece zip together: a handle appears.
    const Piece& pa = sp.pieces[a.piece];
    Piece mod;
    mod.genus = pa.genus + 1;
    mod.punctures = pa.punctures;
    mod.interior_marked = pa.interior_marked;
    for (int c = 0; c < static_cast<int>(pa.cycles.size()); ++c)
      if (c != a.cycle && c != b.cycle) mod.cycles.push_back(pa.cycles[c]);
    std::vector<Side> splice = cycle_without(pa.cycles[a.cycle], a.pos);
    std::vector<Side> tail = cycle_without(pa.cycles[b.cycle], b.pos);
    splice.insert(splice.end(), tail.begin(), tail.end());
    push_if_nonempty(mod.cycles, std::move(splice));
    for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p) {
      if (p == a.piece) {
        affected = static_cast<int>(out.pieces.size());
        out.pieces.push_back(mod);
      } else {
        out.pieces.push_back(sp.pieces[p]);
      }
    }
  } else {
    // One cycle splits at the two erased sides into its two maximal runs.
    const Piece& pa = sp.pieces[a.piece];
    const auto& sides = pa.cycles[a.cycle].sides;
    int len = static_cast<int>(sides.size());
    int i = std::min(a.pos, b.pos), j = std::max(a.pos, b.pos);
    Piece mod;
    mod.genus = pa.genus;
    mod.punctures = pa.punctures;
    mod.interior_marked = pa.interior_marked;
    for (int c = 0; c < static_cast<int>(pa.cycles.size()); ++c)
      if (c != a.cycle) mod.cycles.push_back(pa.cycles[c]);
    std::vector<Side> run1, run2;
    for (int k = i + 1; k < j; ++k) run1.push_back(sides[k]);
    for (int k = (j + 1) % len; k != i; k = (k + 1) % len) run2.push_back(sides[k]);
    push_if_nonempty(mod.cycles, std::move(run1));
    push_if_nonempty(mod.cycles, std::move(run2));
    for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p) {
      if (p == a.piece) {
        affected = static_cast<int>(out.pieces.size());
        out.pieces.push_back(mod);
      } else {
        out.pieces.push_back(sp.pieces[p]);
      }
    }
  }

  // A label with no remaining arc turns into an interior marked point.
  std::set<int> still_incident;
  for (const auto& x : out.arcs) {
    still_incident.insert(x.u);
    still_incident.insert(x.v);
  }
  std::vector<int> orphaned;
  for (int lbl : {arc->u, arc->v})
    if (!still_incident.count(lbl)) orphaned.push_back(lbl);
  merge_interior(out.pieces[affected].interior_marked, orphaned);

  return out;
}

std::vector<std::pair<int, SplitPresentation>> all_deletions(const SplitPresentation& sp) {
  if (sp.arcs.size() < 2)
    throw Error(Errc::LastArc, "a single-arc system has no deletions");
  std::vector<std::pair<int, SplitPresentation>> out;
  out.reserve(sp.arcs.size());
  for (const auto& a : sp.arcs) out.emplace_back(a.id, delete_arc(sp, a.id));
  return out;
}

}  // namespace asl
