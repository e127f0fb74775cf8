#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/certificate.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/family.hpp"

namespace rainbow {

// The pigeonhole index sets behind a chord-pair reroute.  `left` holds the
// dropped-edge positions j whose first chord (x_a, x_j) lies in G_{color_a},
// `right` those whose second chord (x_b, x_{j+1}) lies in G_{color_b}.  The
// two ranges together cover `universe_size` positions, so whenever
// |left| + |right| > universe_size the intersection is provably nonempty;
// that certification is asserted before every reroute that relies on it.
struct ChordIndexSets {
  std::string context;
  int anchor_a = -1;
  int anchor_b = -1;
  ColorId color_a = -1;
  ColorId color_b = -1;
  std::vector<int> left;
  std::vector<int> right;
  int universe_size = 0;
  std::vector<int> common;  // left intersect right, in probe order
};

struct RerouteOutcome {
  std::optional<RainbowCycleCert> cycle;  // nullopt: not applicable
  ChordIndexSets sets;
};

// Reroutes a rainbow cycle through a pair of chords, dropping the two
// vertices strictly between the anchors: from x_a, jump to x_j, walk back to
// x_b = x_{a+3}, jump to x_{j+1}, and walk forward home.  Retained edges keep
// their colors; the chords take c1 and c2, which must be free once the three
// edges between the anchors are dropped.  The smallest feasible j (by cyclic
// offset from the anchors) wins.  Output length is exactly input length - 2.
RerouteOutcome chord_pair_reroute(const GraphFamily& family, const RainbowCycleCert& cycle,
                                  int a_pos, int b_pos, ColorId c1, ColorId c2);

// Recolors one cycle edge to target_color by shifting colors along the cycle
// segment between the edge and the current holder of that color, one edge to
// its neighbor at a time.  Every cycle edge must be strong in the family,
// which is what makes each shifted assignment legal.
RainbowCycleCert strong_edge_relabel(const GraphFamily& family, const RainbowCycleCert& cycle,
                                     int edge_pos, ColorId target_color);

// From a rainbow Hamiltonian cycle, produce a rainbow (n-1)-cycle through v,
// or establish that the family is the balanced-bipartite exception (the only
// way the shorter cycle can fail to exist when sigma >= n).
using ReduceByOneResult = std::variant<RainbowCycleCert, ExceptionEvidence>;
ReduceByOneResult reduce_by_one(const GraphFamily& family, const RainbowCycleCert& ham, VertexId v);

struct ReduceOutcome {
  std::optional<RainbowCycleCert> cycle;
  std::vector<std::string> failed_branches;  // trace, in attempt order
};

// Shortens a rainbow cycle of length l >= 8 through v to one of length l-2
// through v, trying each constructive branch in turn: a direct short chord, a
// chord-pair reroute, a detour cycle of length l-1, its short chords, a wide
// chord-pair pigeonhole, and detours through vertices off the cycle.  Not
// applicable (with the branch trace) when every branch misses; callers then
// fall back to the exhaustive search.
ReduceOutcome reduce_by_two(const GraphFamily& family, const RainbowCycleCert& cyc, VertexId v);

// Rainbow 5-cycle through v, built from a rainbow 7-cycle through v (supplied
// or searched for), with the exhaustive search as the final fallback: a
// nullopt outcome certifies that no rainbow C_5 through v exists at all.
ReduceOutcome find_c5_through(const GraphFamily& family, VertexId v,
                              std::optional<RainbowCycleCert> base7 = std::nullopt);

// Same contract for a rainbow 4-cycle built from a rainbow 5-cycle.
ReduceOutcome find_c4_through(const GraphFamily& family, VertexId v,
                              std::optional<RainbowCycleCert> base5 = std::nullopt);

// Rainbow triangle x -> y -> z -> x with z drawn from a common neighborhood:
// scans colors b on xy, colors a missing xy (all remaining colors when xy is
// strong), and colors c' off {a, b}; smallest indices win.
std::optional<RainbowCycleCert> triangle_via_common_neighborhood(const GraphFamily& family,
                                                                 VertexId x, VertexId y);

// Either a certificate per length (3 is included when a rainbow triangle
// through v exists; 4..n are always present), or the verified bipartite
// exception together with certificates for every even length in [4, n].
struct VertexPancyclicResult {
  std::map<int, RainbowCycleCert> cycles;
  std::optional<ExceptionEvidence> exception;
};

// Realizes the vertex-pancyclicity pipeline for sigma >= n: Hamiltonian base
// from the oracle, reduce_by_one, repeated reduce_by_two down the two parity
// chains, the 5- and 4-cycle constructions, then the triangle scan.  Every
// constructive miss falls back to the oracle; an oracle miss on a length in
// [4, n] triggers exception detection.  For n <= 7 (or oracle_only) every
// length is answered by the oracle directly.
VertexPancyclicResult constructive_vertex_pancyclic(const GraphFamily& family, VertexId v,
                                                    bool oracle_only = false);

}  // namespace rainbow
