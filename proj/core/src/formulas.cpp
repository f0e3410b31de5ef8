#include "asl/formulas.hpp"

#include <string>

namespace asl {

int arc_complex_dim(const SurfaceSpec& spec) {
  require_valid(spec);
  return 6 * spec.genus - 7 + 2 * spec.points + spec.decorated;
}

int spine_dim(const SurfaceSpec& spec) {
  require_valid(spec);
  int d = 4 * spec.genus - 4 + spec.points + spec.decorated;
  return spec.decorated == spec.points ? d - 1 : d;
}

int harer_claimed_dim(const SurfaceSpec& spec) {
  require_valid(spec);
  return 4 * spec.genus - 5 + spec.points + spec.decorated;
}

int min_filling_rank(const SurfaceSpec& spec) {
  require_valid(spec);
  int r = 2 * spec.genus + spec.points - 3;
  return spec.decorated == spec.points ? r + 1 : r;
}

bool nonfilling_codim2(const SurfaceSpec& spec) {
  require_valid(spec);
  return spec.decorated == 1;
}

MaximalPieceCounts maximal_piece_counts(const SurfaceSpec& spec) {
  require_valid(spec);
  MaximalPieceCounts c;
  c.arcs = 6 * spec.genus - 6 + 2 * spec.points + spec.decorated;
  c.triangles = 4 * spec.genus - 4 + spec.points + spec.decorated;
  c.monogons = spec.points - spec.decorated;
  if (3 * c.triangles + c.monogons != 2 * c.arcs)
    throw Error(Errc::InternalCheck, "side count does not match the arc count");
  return c;
}

int vcd_pmod(int genus, int punctures) {
  if (genus == 0 && punctures >= 3) return punctures - 3;
  if (genus == 1 && punctures == 0) return 1;
  if (genus >= 2 && punctures == 0) return 4 * genus - 5;
  if (genus >= 1 && punctures >= 1) return 4 * genus - 4 + punctures;
  throw Error(Errc::OutOfTable, "no vcd entry for (g=" + std::to_string(genus) +
                                    ", s=" + std::to_string(punctures) + ")");
}

int gd_pmod(int genus, int punctures) {
  if (punctures < 1 || 2 * genus + punctures <= 2)
    throw Error(Errc::OutOfTable, "geometric dimension needs s >= 1 and 2g + s > 2");
  return vcd_pmod(genus, punctures);
}

}  // namespace asl
