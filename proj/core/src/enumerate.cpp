#include "asl/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <utility>

#include "asl/surgery.hpp"

namespace asl {

namespace {

// Fixed pieces to glue: triangles first, then once-punctured monogons.
struct Shape {
  int triangles = 0;
  int monogons = 0;

  int pieces() const { return triangles + monogons; }
  int slots() const { return 3 * triangles + monogons; }
  int piece_of(int slot) const {
    return slot < 3 * triangles ? slot / 3 : triangles + (slot - 3 * triangles);
  }
  int first_slot(int piece) const {
    return piece < triangles ? 3 * piece : 3 * triangles + (piece - triangles);
  }
  int slots_in(int piece) const { return piece < triangles ? 3 : 1; }
};

using ClassMap = std::map<CanonicalCode, SplitPresentation>;

SplitPresentation assemble(const SurfaceSpec& spec, const Shape& sh,
                           const std::vector<int>& match) {
  SplitPresentation sp;
  sp.spec = spec;
  int slots = sh.slots();
  std::vector<Side> side_at(slots);
  int next_id = 1;
  for (int i = 0; i < slots; ++i) {
    if (match[i] > i) {
      side_at[i] = {next_id, Dir::Forward};
      side_at[match[i]] = {next_id, Dir::Backward};
      ++next_id;
    }
  }
  for (int p = 0; p < sh.pieces(); ++p) {
    Piece piece;
    piece.punctures = p < sh.triangles ? 0 : 1;
    BoundaryCycle cyc;
    for (int q = 0; q < sh.slots_in(p); ++q)
      cyc.sides.push_back(side_at[sh.first_slot(p) + q]);
    piece.cycles.push_back(std::move(cyc));
    sp.pieces.push_back(std::move(piece));
  }
  for (int a = 1; a < next_id; ++a) sp.arcs.push_back({a, 0, 0});
  return sp;
}

// Labels the vertex classes of a completed gluing every possible way and
// keeps the classes of the valid outcomes.
void emit_classes(const SurfaceSpec& spec, const Shape& sh, const std::vector<int>& match,
                  EquivMode mode, ClassMap& out) {
  SplitPresentation sp = assemble(spec, sh, match);
  CornerTable ct = corner_orbits(sp);
  int m = spec.decorated;
  if (ct.orbit_count != m) return;

  struct Ends {
    int u_orbit = 0;
    int v_orbit = 0;
  };
  std::vector<Ends> ends(sp.arcs.size());
  for (int i = 0; i < sh.slots(); ++i) {
    if (match[i] < i) continue;
    int p = sh.piece_of(i);
    int k = i - sh.first_slot(p);
    int len = sh.slots_in(p);
    int arc = sp.pieces[p].cycles[0].sides[k].arc;
    ends[arc - 1] = {ct.orbit[ct.index_of(sp, p, 0, k)],
                     ct.orbit[ct.index_of(sp, p, 0, (k + 1) % len)]};
  }

  std::vector<int> label(m);
  std::iota(label.begin(), label.end(), 1);
  do {
    for (std::size_t a = 0; a < sp.arcs.size(); ++a) {
      sp.arcs[a].u = label[ends[a].u_orbit];
      sp.arcs[a].v = label[ends[a].v_orbit];
    }
    if (validate(sp).valid) out.emplace(canonical_code(sp, mode), sp);
    if (mode == EquivMode::Mod) break;  // the code ignores the labeling anyway
  } while (std::next_permutation(label.begin(), label.end()));
}

struct Searcher {
  SurfaceSpec spec;
  Shape sh;
  EquivMode mode = EquivMode::PMod;
  bool naive = false;

  std::vector<int> partner_choices(const std::vector<int>& match,
                                   const std::vector<int>& touched, int i) const {
    std::vector<int> out;
    int slots = sh.slots();
    int pi = sh.piece_of(i);
    int seen_tri = -1, seen_mono = -1;
    for (int j = i + 1; j < slots; ++j) {
      if (match[j] != -1) continue;
      int pj = sh.piece_of(j);
      if (naive || pj == pi || touched[pj] > 0) {
        out.push_back(j);
        continue;
      }
      // Untouched foreign piece: interchangeable with every later untouched
      // piece of its kind and rotation-symmetric, so one slot represents all.
      int& seen = pj < sh.triangles ? seen_tri : seen_mono;
      if (seen != -1 && seen != pj) continue;
      seen = pj;
      if (j != sh.first_slot(pj)) continue;
      out.push_back(j);
    }
    return out;
  }

  void collect(std::vector<int>& match, std::vector<int>& touched, ClassMap& out) const {
    int slots = sh.slots();
    int i = 0;
    while (i < slots && match[i] != -1) ++i;
    if (i == slots) {
      emit_classes(spec, sh, match, mode, out);
      return;
    }
    for (int j : partner_choices(match, touched, i)) {
      match[i] = j;
      match[j] = i;
      ++touched[sh.piece_of(i)];
      ++touched[sh.piece_of(j)];
      collect(match, touched, out);
      --touched[sh.piece_of(j)];
      --touched[sh.piece_of(i)];
      match[i] = match[j] = -1;
    }
  }
};

// Fans out over the partner choices for slot 0; branch results merge in
// branch order, so the outcome is independent of scheduling.
ClassMap search_all(const Searcher& s, int threads) {
  int slots = s.sh.slots();
  std::vector<int> match(slots, -1), touched(s.sh.pieces(), 0);
  std::vector<int> tops = s.partner_choices(match, touched, 0);

  std::vector<ClassMap> found(tops.size());
  auto run_branch = [&](std::size_t k) {
    std::vector<int> mt(slots, -1), tc(s.sh.pieces(), 0);
    mt[0] = tops[k];
    mt[tops[k]] = 0;
    ++tc[s.sh.piece_of(0)];
    ++tc[s.sh.piece_of(tops[k])];
    s.collect(mt, tc, found[k]);
  };

  if (threads <= 1 || tops.size() <= 1) {
    for (std::size_t k = 0; k < tops.size(); ++k) run_branch(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= tops.size()) return;
        try {
          run_branch(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    int n = std::min(threads, static_cast<int>(tops.size()));
    for (int k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
  }

  ClassMap merged;
  for (auto& part : found)
    for (auto& [code, rep] : part) merged.emplace(code, rep);
  return merged;
}

void link(FillingPoset& poset, int parent, int child) {
  auto& c = poset.nodes[parent].children;
  if (std::find(c.begin(), c.end(), child) == c.end()) c.push_back(child);
  auto& p = poset.nodes[child].parents;
  if (std::find(p.begin(), p.end(), parent) == p.end()) p.push_back(parent);
}

}  // namespace

MaximalClasses enumerate_maximal(const SurfaceSpec& spec, EquivMode mode,
                                 const EnumOptions& opt) {
  require_valid(spec);
  if (mode == EquivMode::Mod && spec.decorated != spec.points)
    throw Error(Errc::ModModeUnavailable,
                "Mod equivalence needs every distinguished point decorated (m = s)");
  int g = spec.genus, s = spec.points, m = spec.decorated;
  int arcs = 6 * g - 6 + 2 * s + m;
  if (arcs > opt.budget)
    throw Error(Errc::BudgetExceeded,
                "enumeration needs E = " + std::to_string(arcs) + " arcs, over the budget of " +
                    std::to_string(opt.budget));
  Shape sh{4 * g - 4 + s + m, s - m};
  if (3 * sh.triangles + sh.monogons != 2 * arcs)
    throw Error(Errc::InternalCheck, "slot count does not match the arc count");

  ClassMap found = search_all(Searcher{spec, sh, mode, opt.naive}, opt.threads);
  MaximalClasses out;
  out.reps.reserve(found.size());
  out.codes.reserve(found.size());
  for (auto& [code, rep] : found) {
    out.codes.push_back(code);
    out.reps.push_back(rep);
  }
  return out;
}

int FillingPoset::index_of(const CanonicalCode& code) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[i].code == code) return i;
  return -1;
}

FillingPoset enumerate_filling(const SurfaceSpec& spec, EquivMode mode,
                               const EnumOptions& opt) {
  MaximalClasses max = enumerate_maximal(spec, mode, opt);
  FillingPoset poset;
  std::map<CanonicalCode, int> index;
  std::vector<int> queue;
  for (std::size_t i = 0; i < max.reps.size(); ++i) {
    int id = static_cast<int>(poset.nodes.size());
    poset.nodes.push_back({max.reps[i], max.codes[i], rank(max.reps[i]), {}, {}});
    index.emplace(max.codes[i], id);
    poset.roots.push_back(id);
    queue.push_back(id);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int i = queue[q];
    if (poset.nodes[i].rep.arcs.size() < 2) continue;
    for (auto& [arc_id, child] : all_deletions(poset.nodes[i].rep)) {
      (void)arc_id;
      if (!fills_up(child)) continue;
      CanonicalCode code = canonical_code(child, mode);
      int j;
      auto it = index.find(code);
      if (it == index.end()) {
        j = static_cast<int>(poset.nodes.size());
        poset.nodes.push_back({child, code, rank(child), {}, {}});
        index.emplace(std::move(code), j);
        queue.push_back(j);
      } else {
        j = it->second;
      }
      link(poset, i, j);
    }
  }
  return poset;
}

SpineResult spine_dimension_bruteforce(const SurfaceSpec& spec, EquivMode mode,
                                       const EnumOptions& opt) {
  FillingPoset poset = enumerate_filling(spec, mode, opt);
  int n = static_cast<int>(poset.nodes.size());
  if (n == 0) throw Error(Errc::InternalCheck, "no filling classes at all");

  std::vector<int> down(n, -1);
  std::function<int(int)> depth = [&](int i) -> int {
    if (down[i] >= 0) return down[i];
    int best = 0;
    for (int j : poset.nodes[i].children) best = std::max(best, 1 + depth(j));
    return down[i] = best;
  };

  int dim = -1, start = -1;
  for (int r : poset.roots)
    if (depth(r) > dim) {
      dim = depth(r);
      start = r;
    }
  int over_all = 0, max_rank = 0, min_rank = std::numeric_limits<int>::max();
  for (int i = 0; i < n; ++i) {
    over_all = std::max(over_all, depth(i));
    max_rank = std::max(max_rank, poset.nodes[i].rank);
    min_rank = std::min(min_rank, poset.nodes[i].rank);
  }
  if (dim != over_all || dim != max_rank - min_rank)
    throw Error(Errc::InternalCheck,
                "longest chain " + std::to_string(dim) + " disagrees with rank spread " +
                    std::to_string(max_rank - min_rank));

  std::vector<const CanonicalCode*> want;
  for (int cur = start; depth(cur) > 0;) {
    int next = -1;
    for (int j : poset.nodes[cur].children)
      if (depth(j) == depth(cur) - 1) {
        next = j;
        break;
      }
    if (next == -1) throw Error(Errc::InternalCheck, "chain depth without a matching child");
    want.push_back(&poset.nodes[next].code);
    cur = next;
  }

  // The stored representative of a node need not literally contain the next
  // node's arcs, so the witness is rebuilt deletion by deletion.
  std::vector<SplitPresentation> chain{poset.nodes[start].rep};
  for (const CanonicalCode* code : want) {
    bool found = false;
    for (auto& [arc_id, child] : all_deletions(chain.back())) {
      (void)arc_id;
      if (fills_up(child) && canonical_code(child, mode) == *code) {
        chain.push_back(child);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::InternalCheck, "recorded cover without a realizing deletion");
  }
  std::reverse(chain.begin(), chain.end());

  SpineResult res;
  res.dim = dim;
  res.witness.steps = std::move(chain);
  return res;
}

int min_filling_rank_bruteforce(const SurfaceSpec& spec, EquivMode mode,
                                const EnumOptions& opt) {
  FillingPoset poset = enumerate_filling(spec, mode, opt);
  int best = std::numeric_limits<int>::max();
  for (const auto& node : poset.nodes) best = std::min(best, node.rank);
  for (const auto& node : poset.nodes) {
    if (!node.children.empty()) continue;
    if (spec.decorated < spec.points) {
      for (const auto& piece : node.rep.pieces) {
        bool once_punctured_disc = piece.genus == 0 && piece.cycles.size() == 1 &&
                                   piece.punctures == 1 && piece.interior_marked.empty();
        if (!once_punctured_disc)
          throw Error(Errc::InternalCheck,
                      "minimal filling class with a piece that is not a once-punctured disc");
      }
    } else {
      const auto& pieces = node.rep.pieces;
      bool single_disc = pieces.size() == 1 && pieces[0].genus == 0 &&
                         pieces[0].cycles.size() == 1 && pieces[0].punctures == 0 &&
                         pieces[0].interior_marked.empty();
      if (!single_disc)
        throw Error(Errc::InternalCheck, "minimal filling class is not a single disc");
    }
  }
  return best;
}

std::vector<SplitPresentation> enumerate_all_subsystems(const SurfaceSpec& spec, EquivMode mode,
                                                        const EnumOptions& opt) {
  MaximalClasses max = enumerate_maximal(spec, mode, opt);
  std::map<CanonicalCode, SplitPresentation> seen;
  std::vector<const SplitPresentation*> queue;
  for (std::size_t i = 0; i < max.reps.size(); ++i) {
    auto [it, fresh] = seen.emplace(max.codes[i], max.reps[i]);
    if (fresh) queue.push_back(&it->second);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const SplitPresentation& sp = *queue[q];
    if (sp.arcs.size() < 2) continue;
    for (auto& [arc_id, child] : all_deletions(sp)) {
      (void)arc_id;
      if (!validate(child).valid)
        throw Error(Errc::InternalCheck, "deleting from a valid system produced an invalid one");
      CanonicalCode code = canonical_code(child, mode);
      auto [it, fresh] = seen.emplace(std::move(code), child);
      if (fresh) queue.push_back(&it->second);
    }
  }
  std::vector<SplitPresentation> out;
  out.reserve(seen.size());
  for (auto& [code, rep] : seen) out.push_back(rep);
  return out;
}

bool a_infinity_codimension_check(const SurfaceSpec& spec, EquivMode mode,
                                  const EnumOptions& opt) {
  std::vector<SplitPresentation> all = enumerate_all_subsystems(spec, mode, opt);
  int dim_a = 6 * spec.genus - 7 + 2 * spec.points + spec.decorated;
  for (const auto& sp : all)
    if (!fills_up(sp) && rank(sp) > dim_a - 2) return false;
  return true;
}

}  // namespace asl
