#pragma once

#include <optional>

#include "rainbow/certificate.hpp"
#include "rainbow/family.hpp"
#include "rainbow/report.hpp"

namespace rainbow {

// Exhaustive backtracking search for a rainbow cycle of the given length,
// optionally anchored at a vertex it must pass through.  Complete: a nullopt
// is returned only after the whole search space is exhausted, so it certifies
// nonexistence.  Deterministic: neighbors are explored in ascending VertexId
// and colors in ascending ColorId, so the returned certificate is a pure
// function of the input.
//
// Intended scale: existence queries up to n ~ 20, exhaustive cross-checks up
// to n ~ 8.  There are no timeouts here; wall-clock budgets belong to callers.
std::optional<RainbowCycleCert> find_rainbow_cycle(const GraphFamily& family, int length,
                                                   std::optional<VertexId> through = std::nullopt);

// Surveys rainbow cycle existence for every length in [lo, hi] (and every
// vertex when per_vertex), reporting a certificate or NotFound per cell,
// whether the family is rainbow pancyclic / vertex-pancyclic on the range,
// and whether it is the balanced-bipartite exception.
VerificationReport pancyclicity_report(const GraphFamily& family, int lo, int hi, bool per_vertex);

}  // namespace rainbow
