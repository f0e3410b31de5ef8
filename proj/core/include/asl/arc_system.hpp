#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace asl {

enum class Errc {
  InvalidSpec,
  Precondition,
  LastArc,
  UnknownArc,
  NonIntegerGenus,
  ModModeUnavailable,
  BudgetExceeded,
  NotASubdividableTriangle,
  OutOfTable,
  ParseError,
  SchemaVersionMismatch,
  InternalCheck,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Closed oriented genus-g surface with s distinguished points, the first m of
// which ("labels" 1..m) stay in the surface; the other s-m become punctures.
struct SurfaceSpec {
  int genus = 0;
  int points = 0;
  int decorated = 0;

  int punctures() const { return points - decorated; }
  bool ok() const {
    return genus >= 0 && decorated >= 1 && decorated <= points &&
           2 * genus + points > 2;
  }
  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

void require_valid(const SurfaceSpec& spec);  // throws Error(InvalidSpec)

enum class Dir : std::uint8_t { Forward, Backward };

inline Dir opposite(Dir d) {
  return d == Dir::Forward ? Dir::Backward : Dir::Forward;
}

// Unoriented arc between labels u and v (possibly u == v); the (u,v) order
// only fixes what "Forward" means for its two sides.
struct Arc {
  int id = 0;
  int u = 0;
  int v = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Side {
  int arc = 0;
  Dir dir = Dir::Forward;
  friend auto operator<=>(const Side&, const Side&) = default;
};

// Cyclic word of directed arc sides, read with the piece on the left.
// operator== is literal; rotation-insensitive comparison is a free function.
struct BoundaryCycle {
  std::vector<Side> sides;
  friend bool operator==(const BoundaryCycle&, const BoundaryCycle&) = default;
};

struct Piece {
  int genus = 0;
  int punctures = 0;
  std::vector<int> interior_marked;  // sorted, duplicate-free label set
  std::vector<BoundaryCycle> cycles;

  int side_count() const {
    int n = 0;
    for (const auto& c : cycles) n += static_cast<int>(c.sides.size());
    return n;
  }
  friend bool operator==(const Piece&, const Piece&) = default;
};

// An arc system encoded by the pieces the arcs split the surface into, plus
// the implicit side gluing: every arc id occurs on exactly two sides overall.
struct SplitPresentation {
  SurfaceSpec spec;
  std::vector<Arc> arcs;
  std::vector<Piece> pieces;

  const Arc* find_arc(int id) const;
  friend bool operator==(const SplitPresentation&, const SplitPresentation&) = default;
};

int side_start_label(const SplitPresentation& sp, const Side& s);
int side_end_label(const SplitPresentation& sp, const Side& s);

// 2*(2 - 2h - b - n - |interior_marked|) - l.  Negative for every piece
// except an empty monogon (+1) and an empty bigon (0), the two shapes whose
// boundary arcs compress into Delta.
int doubled_euler(const Piece& piece);

enum class PieceKind { Triangle, OncePuncturedMonogon, Other };

struct PieceClass {
  PieceKind kind = PieceKind::Other;
  int genus = 0;
  int boundaries = 0;
  int punctures = 0;
  int corners = 0;
  int interior_marked = 0;
  friend bool operator==(const PieceClass&, const PieceClass&) = default;
};

PieceClass classify_piece(const Piece& piece);
std::string piece_class_name(const PieceClass& pc);

struct ValidationFailure {
  std::string check;
  std::string detail;
  std::vector<int> indices;
};

struct ValidationReport {
  bool valid = false;
  std::vector<ValidationFailure> failures;
};

ValidationReport validate(const SplitPresentation& sp);

struct DerivedInvariants {
  int genus = 0;
  int punctures = 0;
  std::vector<int> incident;  // sorted labels that are arc endpoints
};

// Recomputes genus from (V_a - E) + sum(2 - 2h - b) = 2 - 2g; throws
// NonIntegerGenus when the count is odd, Precondition when there are no arcs.
DerivedInvariants derive_invariants(const SplitPresentation& sp);

int rank(const SplitPresentation& sp);  // |arcs| - 1

// Every label incident and every piece a disc with at most one puncture.
bool fills_up(const SplitPresentation& sp);

// Every piece a triangle or a once-punctured monogon.
bool is_maximal(const SplitPresentation& sp);

// Orientation reversal: each cycle reversed, each side direction flipped.
SplitPresentation mirrored(const SplitPresentation& sp);

// Rotates every cycle to its lexicographically least rotation and sorts
// interior_marked; arc and piece order are untouched.
SplitPresentation normalized(const SplitPresentation& sp);

bool cycles_equal_up_to_rotation(const BoundaryCycle& a, const BoundaryCycle& b);

// Corner (p,c,k) is the vertex sector between sides k-1 and k of cycle c of
// piece p.  Orbits of corner adjacency around a vertex are the vertex classes
// of the glued surface; a valid presentation has one orbit per incident label.
struct CornerTable {
  struct Ref {
    int piece = 0;
    int cycle = 0;
    int pos = 0;
  };
  std::vector<Ref> corners;  // global index -> location
  std::vector<int> orbit;    // global index -> orbit id
  int orbit_count = 0;
  std::vector<int> first_of;  // per piece, global index of corner (p,0,0)

  int index_of(const SplitPresentation& sp, int piece, int cycle, int pos) const;
};

// Requires every referenced arc to occur on exactly two sides.
CornerTable corner_orbits(const SplitPresentation& sp);

}  // namespace asl
