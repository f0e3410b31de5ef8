#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "asl/enumerate.hpp"

namespace asl::testing {

namespace {

Side fwd(int id) { return {id, Dir::Forward}; }
Side bwd(int id) { return {id, Dir::Backward}; }

BoundaryCycle cyc(std::vector<Side> sides) { return {std::move(sides)}; }

}  // namespace

SplitPresentation sphere_two_monogons() {
  SplitPresentation sp;
  sp.spec = {0, 3, 1};
  sp.arcs = {{1, 1, 1}};
  sp.pieces = {{0, 1, {}, {cyc({fwd(1)})}}, {0, 1, {}, {cyc({bwd(1)})}}};
  return sp;
}

SplitPresentation torus_annulus() {
  SplitPresentation sp;
  sp.spec = {1, 1, 1};
  sp.arcs = {{1, 1, 1}};
  sp.pieces = {{0, 0, {}, {cyc({fwd(1)}), cyc({bwd(1)})}}};
  return sp;
}

SplitPresentation torus_square() {
  SplitPresentation sp;
  sp.spec = {1, 1, 1};
  sp.arcs = {{1, 1, 1}, {2, 1, 1}};
  sp.pieces = {{0, 0, {}, {cyc({fwd(1), fwd(2), bwd(1), bwd(2)})}}};
  return sp;
}

SplitPresentation torus_two_triangles() {
  SplitPresentation sp;
  sp.spec = {1, 1, 1};
  sp.arcs = {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}};
  sp.pieces = {{0, 0, {}, {cyc({fwd(1), fwd(2), fwd(3)})}},
               {0, 0, {}, {cyc({bwd(1), bwd(2), bwd(3)})}}};
  return sp;
}

SplitPresentation theta_system() {
  SplitPresentation sp;
  sp.spec = {0, 3, 3};
  sp.arcs = {{1, 3, 1}, {2, 1, 2}, {3, 2, 3}};
  sp.pieces = {{0, 0, {}, {cyc({fwd(1), fwd(2), fwd(3)})}},
               {0, 0, {}, {cyc({bwd(3), bwd(2), bwd(1)})}}};
  return sp;
}

SplitPresentation loop_and_chord() {
  SplitPresentation sp;
  sp.spec = {0, 3, 3};
  sp.arcs = {{1, 1, 1}, {2, 1, 2}};
  sp.pieces = {{0, 0, {}, {cyc({fwd(1), fwd(2), bwd(2)})}},
               {0, 0, {3}, {cyc({bwd(1)})}}};
  return sp;
}

SplitPresentation marked_bigon_chord() {
  SplitPresentation sp;
  sp.spec = {0, 3, 3};
  sp.arcs = {{1, 1, 2}};
  sp.pieces = {{0, 0, {3}, {cyc({fwd(1), bwd(1)})}}};
  return sp;
}

SplitPresentation two_empty_bigons() {
  SplitPresentation sp;
  sp.spec = {0, 3, 3};
  sp.arcs = {{1, 1, 2}, {2, 1, 2}};
  sp.pieces = {{0, 0, {3}, {cyc({fwd(1), bwd(2)})}},
               {0, 0, {}, {cyc({fwd(2), bwd(1)})}}};
  return sp;
}

SplitPresentation chiral_nested_loops() {
  SplitPresentation sp;
  sp.spec = {0, 4, 4};
  sp.arcs = {{1, 1, 2}, {2, 1, 1}, {3, 1, 1}, {4, 1, 1}, {5, 1, 3}, {6, 1, 4}};
  sp.pieces = {{0, 0, {}, {cyc({fwd(1), bwd(1), fwd(2)})}},
               {0, 0, {}, {cyc({bwd(2), fwd(3), fwd(4)})}},
               {0, 0, {}, {cyc({bwd(3), fwd(5), bwd(5)})}},
               {0, 0, {}, {cyc({bwd(4), fwd(6), bwd(6)})}}};
  return sp;
}

SplitPresentation scramble(const SplitPresentation& sp, std::mt19937_64& rng,
                           bool permute_labels) {
  SplitPresentation out = sp;

  std::vector<int> old_ids;
  for (const Arc& a : out.arcs) old_ids.push_back(a.id);
  std::vector<int> new_ids = old_ids;
  std::shuffle(new_ids.begin(), new_ids.end(), rng);
  const int offset = std::uniform_int_distribution<int>(0, 40)(rng);
  std::map<int, int> rename;
  std::map<int, bool> flip;
  for (size_t i = 0; i < old_ids.size(); ++i) {
    rename[old_ids[i]] = new_ids[i] + offset;
    flip[old_ids[i]] = std::bernoulli_distribution(0.5)(rng);
  }

  for (Arc& a : out.arcs) {
    if (flip[a.id]) std::swap(a.u, a.v);
    a.id = rename[a.id];
  }
  for (Piece& p : out.pieces)
    for (BoundaryCycle& c : p.cycles)
      for (Side& sd : c.sides) {
        if (flip[sd.arc]) sd.dir = opposite(sd.dir);
        sd.arc = rename[sd.arc];
      }

  std::shuffle(out.arcs.begin(), out.arcs.end(), rng);
  std::shuffle(out.pieces.begin(), out.pieces.end(), rng);
  for (Piece& p : out.pieces) {
    std::shuffle(p.cycles.begin(), p.cycles.end(), rng);
    for (BoundaryCycle& c : p.cycles) {
      if (c.sides.empty()) continue;
      const size_t r =
          std::uniform_int_distribution<size_t>(0, c.sides.size() - 1)(rng);
      std::rotate(c.sides.begin(), c.sides.begin() + r, c.sides.end());
    }
    std::shuffle(p.interior_marked.begin(), p.interior_marked.end(), rng);
  }

  if (permute_labels) {
    std::vector<int> perm(static_cast<size_t>(out.spec.decorated));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto relab = [&](int x) { return perm[static_cast<size_t>(x - 1)]; };
    for (Arc& a : out.arcs) {
      a.u = relab(a.u);
      a.v = relab(a.v);
    }
    for (Piece& p : out.pieces)
      for (int& x : p.interior_marked) x = relab(x);
  }
  return out;
}

namespace {

struct IsoSearch {
  const SplitPresentation* a = nullptr;
  const SplitPresentation* b = nullptr;
  std::map<int, std::pair<int, bool>> arc_map;  // a-arc -> (b-arc, flipped)
  std::map<int, int> arc_rev;
  std::vector<int> piece_map;
  std::vector<bool> piece_used;

  bool endpoints_ok(int aid, int bid, bool flipped) const {
    const Arc* aa = a->find_arc(aid);
    const Arc* bb = b->find_arc(bid);
    if (!aa || !bb) return false;
    if (flipped) return aa->u == bb->v && aa->v == bb->u;
    return aa->u == bb->u && aa->v == bb->v;
  }

  bool bind(int aid, int bid, bool flipped, std::vector<int>& trail) {
    const auto it = arc_map.find(aid);
    if (it != arc_map.end()) return it->second == std::pair{bid, flipped};
    if (arc_rev.count(bid)) return false;
    if (!endpoints_ok(aid, bid, flipped)) return false;
    arc_map[aid] = {bid, flipped};
    arc_rev[bid] = aid;
    trail.push_back(aid);
    return true;
  }

  void unwind(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      const int aid = trail.back();
      trail.pop_back();
      arc_rev.erase(arc_map[aid].first);
      arc_map.erase(aid);
    }
  }

  bool bind_cycle(const BoundaryCycle& ca, const BoundaryCycle& cb, size_t rot,
                  std::vector<int>& trail) {
    const size_t len = ca.sides.size();
    for (size_t k = 0; k < len; ++k) {
      const Side& sa = ca.sides[k];
      const Side& sb = cb.sides[(k + rot) % len];
      if (!bind(sa.arc, sb.arc, sa.dir != sb.dir, trail)) return false;
    }
    return true;
  }

  static bool same_profile(const Piece& pa, const Piece& pb) {
    if (pa.genus != pb.genus || pa.punctures != pb.punctures) return false;
    auto ka = pa.interior_marked;
    auto kb = pb.interior_marked;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return false;
    std::vector<size_t> la, lb;
    for (const auto& c : pa.cycles) la.push_back(c.sides.size());
    for (const auto& c : pb.cycles) lb.push_back(c.sides.size());
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    return la == lb;
  }

  bool match_cycles(const Piece& pa, const Piece& pb, size_t ci,
                    std::vector<bool>& used, std::vector<int>& trail) {
    if (ci == pa.cycles.size()) return match_pieces(trail);
    const BoundaryCycle& ca = pa.cycles[ci];
    for (size_t j = 0; j < pb.cycles.size(); ++j) {
      if (used[j] || pb.cycles[j].sides.size() != ca.sides.size()) continue;
      const size_t rots = ca.sides.empty() ? 1 : ca.sides.size();
      for (size_t r = 0; r < rots; ++r) {
        const size_t mark = trail.size();
        used[j] = true;
        if ((ca.sides.empty() || bind_cycle(ca, pb.cycles[j], r, trail)) &&
            match_cycles(pa, pb, ci + 1, used, trail))
          return true;
        used[j] = false;
        unwind(trail, mark);
      }
    }
    return false;
  }

  bool match_pieces(std::vector<int>& trail) {
    size_t next = piece_map.size();
    for (size_t i = 0; i < piece_map.size(); ++i)
      if (piece_map[i] < 0) {
        next = i;
        break;
      }
    if (next == piece_map.size()) return true;
    const Piece& pa = a->pieces[next];
    for (size_t j = 0; j < b->pieces.size(); ++j) {
      if (piece_used[j] || !same_profile(pa, b->pieces[j])) continue;
      const size_t mark = trail.size();
      piece_map[next] = static_cast<int>(j);
      piece_used[j] = true;
      std::vector<bool> used(b->pieces[j].cycles.size(), false);
      if (match_cycles(pa, b->pieces[j], 0, used, trail)) return true;
      piece_map[next] = -1;
      piece_used[j] = false;
      unwind(trail, mark);
    }
    return false;
  }

  bool run(const SplitPresentation& lhs, const SplitPresentation& rhs) {
    a = &lhs;
    b = &rhs;
    if (lhs.spec.genus != rhs.spec.genus ||
        lhs.spec.points != rhs.spec.points ||
        lhs.spec.decorated != rhs.spec.decorated)
      return false;
    if (lhs.arcs.size() != rhs.arcs.size() ||
        lhs.pieces.size() != rhs.pieces.size())
      return false;
    arc_map.clear();
    arc_rev.clear();
    piece_map.assign(lhs.pieces.size(), -1);
    piece_used.assign(rhs.pieces.size(), false);
    std::vector<int> trail;
    return match_pieces(trail);
  }
};

SplitPresentation relabel(const SplitPresentation& sp,
                          const std::vector<int>& perm) {
  SplitPresentation out = sp;
  const auto relab = [&](int x) { return perm[static_cast<size_t>(x - 1)]; };
  for (Arc& a : out.arcs) {
    a.u = relab(a.u);
    a.v = relab(a.v);
  }
  for (Piece& p : out.pieces)
    for (int& x : p.interior_marked) x = relab(x);
  return out;
}

}  // namespace

bool isomorphic(const SplitPresentation& a, const SplitPresentation& b,
                EquivMode mode) {
  IsoSearch search;
  if (mode == EquivMode::PMod) return search.run(a, b);
  std::vector<int> perm(static_cast<size_t>(a.spec.decorated));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (search.run(relabel(a, perm), b)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

const std::vector<SplitPresentation>& sample_pool() {
  static const std::vector<SplitPresentation> pool = [] {
    std::vector<SplitPresentation> out;
    for (SurfaceSpec spec :
         {SurfaceSpec{0, 3, 2}, SurfaceSpec{0, 3, 3}, SurfaceSpec{1, 1, 1},
          SurfaceSpec{0, 4, 2}, SurfaceSpec{1, 2, 1}}) {
      auto all = enumerate_all_subsystems(spec, EquivMode::PMod, {9, 2, false});
      out.insert(out.end(), all.begin(), all.end());
    }
    return out;
  }();
  return pool;
}

}  // namespace asl::testing
