#pragma once

// Independent reference enumerator for rainbow cycles: every vertex subset
// of the requested size, every cyclic order of it, every injective coloring
// of the resulting edges, checked one by one.  Deliberately structured
// nothing like the production backtracker (no bit-row unions, no candidate
// pruning) so the two can cross-check each other on existence.

#include <algorithm>
#include <optional>
#include <vector>

#include "rainbow/certificate.hpp"
#include "rainbow/family.hpp"

namespace rainbow::testsupport {

namespace naive_detail {

inline bool assign_colors(const GraphFamily& fam, const std::vector<VertexId>& cycle,
                          std::size_t edge, std::vector<bool>& used,
                          std::vector<ColorId>& colors) {
  const std::size_t len = cycle.size();
  if (edge == len) return true;
  VertexId u = cycle[edge], v = cycle[(edge + 1) % len];
  for (ColorId c = 0; c < fam.color_count(); ++c) {
    if (used[c] || !fam.has_edge(c, u, v)) continue;
    used[c] = true;
    colors[edge] = c;
    if (assign_colors(fam, cycle, edge + 1, used, colors)) return true;
    used[c] = false;
  }
  return false;
}

inline std::optional<RainbowCycleCert> try_orders(const GraphFamily& fam,
                                                  std::vector<VertexId> subset) {
  // First element fixed (kills rotations); both directions still tried.
  std::sort(subset.begin() + 1, subset.end());
  do {
    std::vector<bool> used(fam.color_count(), false);
    std::vector<ColorId> colors(subset.size(), -1);
    if (assign_colors(fam, subset, 0, used, colors)) return RainbowCycleCert{subset, colors};
  } while (std::next_permutation(subset.begin() + 1, subset.end()));
  return std::nullopt;
}

inline std::optional<RainbowCycleCert> try_subsets(const GraphFamily& fam, int length,
                                                   std::optional<VertexId> through,
                                                   std::vector<VertexId>& subset, VertexId from) {
  if (static_cast<int>(subset.size()) == length) {
    if (through &&
        std::find(subset.begin(), subset.end(), *through) == subset.end())
      return std::nullopt;
    return try_orders(fam, subset);
  }
  for (VertexId v = from; v < fam.vertex_count(); ++v) {
    subset.push_back(v);
    if (auto cert = try_subsets(fam, length, through, subset, v + 1)) return cert;
    subset.pop_back();
  }
  return std::nullopt;
}

}  // namespace naive_detail

inline std::optional<RainbowCycleCert> naive_find_rainbow_cycle(
    const GraphFamily& fam, int length, std::optional<VertexId> through = std::nullopt) {
  std::vector<VertexId> subset;
  return naive_detail::try_subsets(fam, length, through, subset, 0);
}

}  // namespace rainbow::testsupport
