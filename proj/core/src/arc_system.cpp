#include "asl/arc_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace asl {

void require_valid(const SurfaceSpec& spec) {
  if (!spec.ok()) {
    std::ostringstream os;
    os << "surface spec (g=" << spec.genus << ", s=" << spec.points
       << ", m=" << spec.decorated
       << ") out of domain: need g >= 0, 1 <= m <= s, 2g + s > 2";
    throw Error(Errc::InvalidSpec, os.str());
  }
}

const Arc* SplitPresentation::find_arc(int id) const {
  for (const auto& a : arcs)
    if (a.id == id) return &a;
  return nullptr;
}

int side_start_label(const SplitPresentation& sp, const Side& s) {
  const Arc* a = sp.find_arc(s.arc);
  if (!a) throw Error(Errc::UnknownArc, "side references unknown arc id " + std::to_string(s.arc));
  return s.dir == Dir::Forward ? a->u : a->v;
}

int side_end_label(const SplitPresentation& sp, const Side& s) {
  const Arc* a = sp.find_arc(s.arc);
  if (!a) throw Error(Errc::UnknownArc, "side references unknown arc id " + std::to_string(s.arc));
  return s.dir == Dir::Forward ? a->v : a->u;
}

int doubled_euler(const Piece& piece) {
  int b = static_cast<int>(piece.cycles.size());
  int k = static_cast<int>(piece.interior_marked.size());
  return 2 * (2 - 2 * piece.genus - b - piece.punctures - k) - piece.side_count();
}

PieceClass classify_piece(const Piece& piece) {
  PieceClass pc;
  pc.genus = piece.genus;
  pc.boundaries = static_cast<int>(piece.cycles.size());
  pc.punctures = piece.punctures;
  pc.corners = piece.side_count();
  pc.interior_marked = static_cast<int>(piece.interior_marked.size());
  if (pc.genus == 0 && pc.boundaries == 1 && pc.interior_marked == 0) {
    if (pc.punctures == 0 && pc.corners == 3) pc.kind = PieceKind::Triangle;
    if (pc.punctures == 1 && pc.corners == 1) pc.kind = PieceKind::OncePuncturedMonogon;
  }
  return pc;
}

std::string piece_class_name(const PieceClass& pc) {
  switch (pc.kind) {
    case PieceKind::Triangle:
      return "triangle";
    case PieceKind::OncePuncturedMonogon:
      return "once-punctured monogon";
    case PieceKind::Other:
      break;
  }
  std::ostringstream os;
  os << "h=" << pc.genus << " b=" << pc.boundaries << " n=" << pc.punctures
     << " l=" << pc.corners << " k=" << pc.interior_marked;
  return os.str();
}

namespace {

struct Occurrence {
  int piece = -1;
  int cycle = -1;
  int pos = -1;
};

// arc id -> side occurrence list, in piece/cycle/position order
std::map<int, std::vector<Occurrence>> occurrence_table(const SplitPresentation& sp) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p) {
    const Piece& piece = sp.pieces[p];
    for (int c = 0; c < static_cast<int>(piece.cycles.size()); ++c) {
      const auto& sides = piece.cycles[c].sides;
      for (int k = 0; k < static_cast<int>(sides.size()); ++k)
        occ[sides[k].arc].push_back({p, c, k});
    }
  }
  return occ;
}

std::vector<int> incident_labels(const SplitPresentation& sp) {
  std::set<int> inc;
  for (const auto& a : sp.arcs) {
    inc.insert(a.u);
    inc.insert(a.v);
  }
  return {inc.begin(), inc.end()};
}

int piece_euler_sum(const SplitPresentation& sp) {
  int sum = 0;
  for (const auto& piece : sp.pieces)
    sum += 2 - 2 * piece.genus - static_cast<int>(piece.cycles.size());
  return sum;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int CornerTable::index_of(const SplitPresentation& sp, int piece, int cycle, int pos) const {
  int idx = first_of[piece];
  for (int c = 0; c < cycle; ++c)
    idx += static_cast<int>(sp.pieces[piece].cycles[c].sides.size());
  return idx + pos;
}

CornerTable corner_orbits(const SplitPresentation& sp) {
  auto occ = occurrence_table(sp);
  for (const auto& [id, occs] : occ)
    if (occs.size() != 2)
      throw Error(Errc::Precondition,
                  "arc " + std::to_string(id) + " has " + std::to_string(occs.size()) +
                      " sides, expected 2");

  CornerTable t;
  t.first_of.resize(sp.pieces.size(), 0);
  for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p) {
    t.first_of[p] = static_cast<int>(t.corners.size());
    for (int c = 0; c < static_cast<int>(sp.pieces[p].cycles.size()); ++c)
      for (int k = 0; k < static_cast<int>(sp.pieces[p].cycles[c].sides.size()); ++k)
        t.corners.push_back({p, c, k});
  }

  // Corner before side k steps to the stop corner of the other side of that
  // arc; iterating walks the link of the underlying vertex.
  auto next = [&](int g) {
    auto [p, c, k] = t.corners[g];
    const Side& s = sp.pieces[p].cycles[c].sides[k];
    const auto& occs = occ.at(s.arc);
    Occurrence other = (occs[0].piece == p && occs[0].cycle == c && occs[0].pos == k)
                           ? occs[1]
                           : occs[0];
    int len = static_cast<int>(sp.pieces[other.piece].cycles[other.cycle].sides.size());
    return t.index_of(sp, other.piece, other.cycle, (other.pos + 1) % len);
  };

  t.orbit.assign(t.corners.size(), -1);
  for (int g = 0; g < static_cast<int>(t.corners.size()); ++g) {
    if (t.orbit[g] != -1) continue;
    int id = t.orbit_count++;
    int cur = g;
    while (t.orbit[cur] == -1) {
      t.orbit[cur] = id;
      cur = next(cur);
    }
  }
  return t;
}

ValidationReport validate(const SplitPresentation& sp) {
  ValidationReport rep;
  auto fail = [&](const char* check, const std::string& detail, std::vector<int> idx = {}) {
    rep.failures.push_back({check, detail, std::move(idx)});
  };

  if (!sp.spec.ok())
    fail("structure", "surface spec out of domain (need g >= 0, 1 <= m <= s, 2g + s > 2)");
  if (sp.arcs.empty()) fail("arc_count", "an arc system has at least one arc");
  if (sp.pieces.empty()) fail("structure", "no pieces");

  const int m = sp.spec.decorated;
  bool structure_ok = rep.failures.empty();

  std::set<int> arc_ids;
  for (const auto& a : sp.arcs) {
    if (!arc_ids.insert(a.id).second) {
      fail("structure", "duplicate arc id " + std::to_string(a.id), {a.id});
      structure_ok = false;
    }
    if (a.u < 1 || a.u > m || a.v < 1 || a.v > m) {
      fail("structure", "arc " + std::to_string(a.id) + " endpoint label outside 1.." +
                            std::to_string(m), {a.id});
      structure_ok = false;
    }
  }

  bool refs_ok = structure_ok;
  for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p) {
    const Piece& piece = sp.pieces[p];
    if (piece.genus < 0 || piece.punctures < 0) {
      fail("structure", "piece has negative genus or puncture count", {p});
      structure_ok = false;
    }
    if (piece.cycles.empty()) {
      fail("structure", "piece has no boundary cycles", {p});
      structure_ok = false;
    }
    std::set<int> seen;
    for (int lbl : piece.interior_marked) {
      if (lbl < 1 || lbl > m || !seen.insert(lbl).second) {
        fail("structure", "piece interior_marked is not a label set within 1.." +
                              std::to_string(m), {p});
        structure_ok = false;
        break;
      }
    }
    for (int c = 0; c < static_cast<int>(piece.cycles.size()); ++c) {
      if (piece.cycles[c].sides.empty()) {
        fail("structure", "empty boundary cycle", {p, c});
        structure_ok = false;
      }
      for (const Side& s : piece.cycles[c].sides)
        if (!arc_ids.count(s.arc)) {
          fail("arc_incidence", "side references unknown arc id " + std::to_string(s.arc),
               {p, c, s.arc});
          refs_ok = false;
        }
    }
  }
  if (!structure_ok) refs_ok = false;

  bool incidence_ok = refs_ok;
  if (refs_ok) {
    auto occ = occurrence_table(sp);
    for (const auto& a : sp.arcs) {
      auto it = occ.find(a.id);
      int count = it == occ.end() ? 0 : static_cast<int>(it->second.size());
      if (count != 2) {
        fail("arc_incidence", "arc " + std::to_string(a.id) + " occurs on " +
                                  std::to_string(count) + " sides, expected 2", {a.id});
        incidence_ok = false;
        continue;
      }
      const auto& occs = it->second;
      Dir d0 = sp.pieces[occs[0].piece].cycles[occs[0].cycle].sides[occs[0].pos].dir;
      Dir d1 = sp.pieces[occs[1].piece].cycles[occs[1].cycle].sides[occs[1].pos].dir;
      if (d0 == d1) {
        fail("orientation", "arc " + std::to_string(a.id) +
                                " is traversed twice in the same direction", {a.id});
        incidence_ok = false;
      }
    }
  }

  bool corners_ok = refs_ok;
  if (refs_ok) {
    for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p) {
      const Piece& piece = sp.pieces[p];
      for (int c = 0; c < static_cast<int>(piece.cycles.size()); ++c) {
        const auto& sides = piece.cycles[c].sides;
        int len = static_cast<int>(sides.size());
        for (int k = 0; k < len; ++k) {
          int end = side_end_label(sp, sides[k]);
          int start = side_start_label(sp, sides[(k + 1) % len]);
          if (end != start) {
            fail("corner_consistency",
                 "cycle corner mismatch: side ends at label " + std::to_string(end) +
                     ", next side starts at label " + std::to_string(start),
                 {p, c, k});
            corners_ok = false;
          }
        }
      }
    }
  }

  if (incidence_ok) {
    UnionFind uf(static_cast<int>(sp.pieces.size()));
    auto occ = occurrence_table(sp);
    for (const auto& [id, occs] : occ) uf.unite(occs[0].piece, occs[1].piece);
    int root = uf.find(0);
    for (int p = 1; p < static_cast<int>(sp.pieces.size()); ++p)
      if (uf.find(p) != root) {
        fail("connectivity", "pieces do not glue into a connected surface", {p});
        break;
      }
  }

  std::vector<int> incident = refs_ok ? incident_labels(sp) : std::vector<int>{};

  if (incidence_ok && corners_ok) {
    CornerTable t = corner_orbits(sp);
    std::map<int, std::set<int>> orbits_of_label;
    for (int g = 0; g < static_cast<int>(t.corners.size()); ++g) {
      auto [p, c, k] = t.corners[g];
      int lbl = side_start_label(sp, sp.pieces[p].cycles[c].sides[k]);
      orbits_of_label[lbl].insert(t.orbit[g]);
    }
    for (int lbl : incident) {
      auto it = orbits_of_label.find(lbl);
      int n = it == orbits_of_label.end() ? 0 : static_cast<int>(it->second.size());
      if (n != 1)
        fail("vertex_links", "label " + std::to_string(lbl) + " has " + std::to_string(n) +
                                 " vertex classes, expected 1", {lbl});
    }
  }

  if (refs_ok) {
    std::set<int> inc(incident.begin(), incident.end());
    std::map<int, int> interior_count;
    for (const auto& piece : sp.pieces)
      for (int lbl : piece.interior_marked) ++interior_count[lbl];
    for (int lbl = 1; lbl <= m; ++lbl) {
      bool is_inc = inc.count(lbl) > 0;
      int ic = interior_count.count(lbl) ? interior_count[lbl] : 0;
      if (is_inc && ic > 0)
        fail("delta_partition", "label " + std::to_string(lbl) +
                                    " is both an arc endpoint and interior marked", {lbl});
      else if (!is_inc && ic == 0)
        fail("delta_partition", "label " + std::to_string(lbl) +
                                    " is neither an arc endpoint nor interior marked", {lbl});
      else if (ic > 1)
        fail("delta_partition", "label " + std::to_string(lbl) +
                                    " is interior marked in " + std::to_string(ic) + " pieces",
             {lbl});
    }
  }

  if (structure_ok) {
    int total = 0;
    for (const auto& piece : sp.pieces) total += piece.punctures;
    if (total != sp.spec.punctures())
      fail("puncture_count", "pieces carry " + std::to_string(total) + " punctures, spec has " +
                                 std::to_string(sp.spec.punctures()));
  }

  if (refs_ok) {
    int chi = static_cast<int>(incident.size()) - static_cast<int>(sp.arcs.size()) +
              piece_euler_sum(sp);
    if (chi != 2 - 2 * sp.spec.genus)
      fail("euler_genus", "Euler count " + std::to_string(chi) + " does not match 2-2g = " +
                              std::to_string(2 - 2 * sp.spec.genus));
  }

  if (structure_ok) {
    for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p) {
      int de = doubled_euler(sp.pieces[p]);
      if (de >= 0)
        fail("condition_2", "piece has doubled Euler characteristic " + std::to_string(de) +
                                ", expected negative", {p});
    }
  }

  rep.valid = rep.failures.empty();
  return rep;
}

DerivedInvariants derive_invariants(const SplitPresentation& sp) {
  if (sp.arcs.empty())
    throw Error(Errc::Precondition, "derive_invariants needs at least one arc");
  DerivedInvariants inv;
  inv.incident = incident_labels(sp);
  for (const auto& piece : sp.pieces) inv.punctures += piece.punctures;
  int chi = static_cast<int>(inv.incident.size()) - static_cast<int>(sp.arcs.size()) +
            piece_euler_sum(sp);
  if ((2 - chi) % 2 != 0)
    throw Error(Errc::NonIntegerGenus,
                "Euler count " + std::to_string(chi) + " gives non-integer genus");
  inv.genus = (2 - chi) / 2;
  return inv;
}

int rank(const SplitPresentation& sp) { return static_cast<int>(sp.arcs.size()) - 1; }

bool fills_up(const SplitPresentation& sp) {
  for (const auto& piece : sp.pieces) {
    if (piece.genus != 0 || piece.cycles.size() != 1 || piece.punctures > 1 ||
        !piece.interior_marked.empty())
      return false;
  }
  auto inc = incident_labels(sp);
  return static_cast<int>(inc.size()) == sp.spec.decorated;
}

bool is_maximal(const SplitPresentation& sp) {
  for (const auto& piece : sp.pieces)
    if (classify_piece(piece).kind == PieceKind::Other) return false;
  return true;
}

SplitPresentation mirrored(const SplitPresentation& sp) {
  SplitPresentation out = sp;
  for (auto& piece : out.pieces)
    for (auto& cycle : piece.cycles) {
      std::reverse(cycle.sides.begin(), cycle.sides.end());
      for (auto& s : cycle.sides) s.dir = opposite(s.dir);
    }
  return out;
}

namespace {

BoundaryCycle least_rotation(const BoundaryCycle& c) {
  int len = static_cast<int>(c.sides.size());
  if (len <= 1) return c;
  int best = 0;
  for (int r = 1; r < len; ++r) {
    for (int k = 0; k < len; ++k) {
      const Side& a = c.sides[(r + k) % len];
      const Side& b = c.sides[(best + k) % len];
      if (a < b) {
        best = r;
        break;
      }
      if (b < a) break;
    }
  }
  BoundaryCycle out;
  out.sides.reserve(len);
  for (int k = 0; k < len; ++k) out.sides.push_back(c.sides[(best + k) % len]);
  return out;
}

}  // namespace

SplitPresentation normalized(const SplitPresentation& sp) {
  SplitPresentation out = sp;
  for (auto& piece : out.pieces) {
    std::sort(piece.interior_marked.begin(), piece.interior_marked.end());
    for (auto& cycle : piece.cycles) cycle = least_rotation(cycle);
  }
  return out;
}

bool cycles_equal_up_to_rotation(const BoundaryCycle& a, const BoundaryCycle& b) {
  if (a.sides.size() != b.sides.size()) return false;
  int len = static_cast<int>(a.sides.size());
  for (int r = 0; r < len; ++r) {
    bool all = true;
    for (int k = 0; k < len && all; ++k) all = a.sides[(r + k) % len] == b.sides[k];
    if (all) return true;
  }
  return len == 0;
}

}  // namespace asl
