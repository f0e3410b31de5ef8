#include "asl/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace asl {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

namespace {

struct Loc {
  int piece = -1;
  int cycle = -1;
  int pos = -1;
};

struct Encoder {
  const SplitPresentation& sp;
  EquivMode mode;
  std::map<int, std::array<Loc, 2>> occ;  // arc id -> its two side locations

  explicit Encoder(const SplitPresentation& s, EquivMode m) : sp(s), mode(m) {
    std::map<int, std::vector<Loc>> tmp;
    for (int p = 0; p < static_cast<int>(sp.pieces.size()); ++p)
      for (int c = 0; c < static_cast<int>(sp.pieces[p].cycles.size()); ++c) {
        const auto& sides = sp.pieces[p].cycles[c].sides;
        for (int k = 0; k < static_cast<int>(sides.size()); ++k)
          tmp[sides[k].arc].push_back({p, c, k});
      }
    for (auto& [id, v] : tmp) {
      if (v.size() != 2)
        throw Error(Errc::Precondition, "arc " + std::to_string(id) + " has " +
                                            std::to_string(v.size()) + " sides, expected 2");
      occ[id] = {v[0], v[1]};
    }
  }

  struct State {
    std::vector<int> piece_no;                         // piece -> visit order or -1
    std::vector<int> piece_by_no;                      // visit order -> piece
    std::vector<std::vector<std::pair<int, int>>> sched;  // piece -> (cycle, start)
    std::vector<std::vector<char>> cycle_done;         // piece -> cycle scheduled?
    std::map<int, std::pair<int, Dir>> arc_no;         // arc id -> (number, first dir)
    std::map<int, int> label_no;                       // Mod mode first-use numbering
    std::vector<std::uint8_t> out;
    int cur_piece = 0;
    int cur_cycle = 0;
  };

  static void emit(State& st, int v) {
    if (v < 0 || v > 255)
      throw Error(Errc::InternalCheck, "canonical code token out of byte range");
    st.out.push_back(static_cast<std::uint8_t>(v));
  }

  int map_label(State& st, int lbl) const {
    if (mode == EquivMode::PMod) return lbl;
    auto it = st.label_no.find(lbl);
    if (it != st.label_no.end()) return it->second;
    int n = static_cast<int>(st.label_no.size()) + 1;
    st.label_no.emplace(lbl, n);
    return n;
  }

  void emit_header(State& st, int p) const {
    const Piece& piece = sp.pieces[p];
    emit(st, piece.genus);
    emit(st, piece.punctures);
    emit(st, static_cast<int>(piece.interior_marked.size()));
    if (mode == EquivMode::PMod) {
      auto sorted = piece.interior_marked;
      std::sort(sorted.begin(), sorted.end());
      for (int lbl : sorted) emit(st, lbl);
    }
    emit(st, static_cast<int>(piece.cycles.size()));
  }

  void encode_cycle(State& st, int p, std::pair<int, int> entry) const {
    const auto& sides = sp.pieces[p].cycles[entry.first].sides;
    int len = static_cast<int>(sides.size());
    emit(st, len);
    for (int k = 0; k < len; ++k) {
      int pos = (entry.second + k) % len;
      const Side& s = sides[pos];
      auto it = st.arc_no.find(s.arc);
      if (it == st.arc_no.end()) {
        int num = static_cast<int>(st.arc_no.size());
        st.arc_no.emplace(s.arc, std::make_pair(num, s.dir));
        emit(st, num);
        emit(st, map_label(st, side_start_label(sp, s)));
        emit(st, map_label(st, side_end_label(sp, s)));
        const auto& both = occ.at(s.arc);
        Loc other = (both[0].piece == p && both[0].cycle == entry.first && both[0].pos == pos)
                        ? both[1]
                        : both[0];
        if (st.piece_no[other.piece] == -1) {
          st.piece_no[other.piece] = static_cast<int>(st.piece_by_no.size());
          st.piece_by_no.push_back(other.piece);
          st.sched[other.piece].push_back({other.cycle, other.pos});
          st.cycle_done[other.piece][other.cycle] = 1;
        } else if (!st.cycle_done[other.piece][other.cycle]) {
          st.sched[other.piece].push_back({other.cycle, other.pos});
          st.cycle_done[other.piece][other.cycle] = 1;
        }
      } else {
        emit(st, it->second.first);
        emit(st, s.dir == it->second.second ? 0 : 1);
      }
    }
  }

  // True when `out` can no longer become the minimum against `best`.
  static bool prefix_worse(const std::vector<std::uint8_t>& out,
                           const std::vector<std::uint8_t>& best) {
    size_t n = std::min(out.size(), best.size());
    for (size_t i = 0; i < n; ++i) {
      if (out[i] < best[i]) return false;
      if (out[i] > best[i]) return true;
    }
    return false;
  }

  void run(State st, std::optional<std::vector<std::uint8_t>>& best) const {
    while (true) {
      if (best && prefix_worse(st.out, *best)) return;
      if (st.cur_piece == static_cast<int>(st.piece_by_no.size())) {
        if (st.piece_by_no.size() != sp.pieces.size())
          throw Error(Errc::Precondition, "presentation is not connected");
        if (!best || st.out < *best) best = std::move(st.out);
        return;
      }
      int p = st.piece_by_no[st.cur_piece];
      int b = static_cast<int>(sp.pieces[p].cycles.size());
      if (st.cur_cycle == 0) emit_header(st, p);
      if (st.cur_cycle == b) {
        ++st.cur_piece;
        st.cur_cycle = 0;
        continue;
      }
      if (st.cur_cycle < static_cast<int>(st.sched[p].size())) {
        encode_cycle(st, p, st.sched[p][st.cur_cycle]);
        ++st.cur_cycle;
        continue;
      }
      // No arc reached the remaining cycles yet: try every start.
      for (int c = 0; c < b; ++c) {
        if (st.cycle_done[p][c]) continue;
        int len = static_cast<int>(sp.pieces[p].cycles[c].sides.size());
        for (int pos = 0; pos < len; ++pos) {
          State st2 = st;
          st2.sched[p].push_back({c, pos});
          st2.cycle_done[p][c] = 1;
          run(std::move(st2), best);
        }
      }
      return;
    }
  }

  CanonicalCode minimum() const {
    std::optional<std::vector<std::uint8_t>> best;
    int np = static_cast<int>(sp.pieces.size());
    for (int p = 0; p < np; ++p)
      for (int c = 0; c < static_cast<int>(sp.pieces[p].cycles.size()); ++c)
        for (int k = 0; k < static_cast<int>(sp.pieces[p].cycles[c].sides.size()); ++k) {
          State st;
          st.piece_no.assign(np, -1);
          st.sched.resize(np);
          for (int q = 0; q < np; ++q)
            st.cycle_done.emplace_back(sp.pieces[q].cycles.size(), 0);
          st.piece_no[p] = 0;
          st.piece_by_no.push_back(p);
          st.sched[p].push_back({c, k});
          st.cycle_done[p][c] = 1;
          run(std::move(st), best);
        }
    if (!best) throw Error(Errc::Precondition, "nothing to encode");
    return CanonicalCode{std::move(*best)};
  }
};

}  // namespace

CanonicalCode canonical_code(const SplitPresentation& sp, EquivMode mode) {
  if (mode == EquivMode::Mod && sp.spec.decorated != sp.spec.points)
    throw Error(Errc::ModModeUnavailable,
                "Mod equivalence needs every distinguished point decorated (m = s)");
  return Encoder(sp, mode).minimum();
}

}  // namespace asl
