#pragma once

// Shared fixtures for the test binaries: small canonical families and a
// couple of generators driven by the library's own deterministic RNG.

#include <utility>
#include <vector>

#include "rainbow/family.hpp"
#include "rainbow/rng.hpp"

namespace rainbow::testsupport {

// n copies of the complete graph K_n.
inline GraphFamily complete_family(int n) {
  GraphFamily fam(n);
  for (ColorId c = 0; c < n; ++c)
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) fam.add_edge(c, u, v);
  return fam;
}

// n empty graphs.
inline GraphFamily empty_family(int n) { return GraphFamily(n); }

inline GraphFamily from_edges(int n,
                              const std::vector<std::vector<std::pair<int, int>>>& per_color) {
  GraphFamily fam(n);
  for (ColorId c = 0; c < static_cast<int>(per_color.size()); ++c)
    for (auto [u, v] : per_color[c]) fam.add_edge(c, u, v);
  return fam;
}

// Random family at the given density; members drawn independently.
inline GraphFamily random_family(int n, double density, Rng& rng) {
  GraphFamily fam(n);
  for (ColorId c = 0; c < n; ++c)
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.chance(density)) fam.add_edge(c, u, v);
  return fam;
}

// Applies one uniformly random vertex relabeling to every color and an
// independent relabeling to the colors; used for invariance properties.
inline GraphFamily relabeled(const GraphFamily& fam, Rng& rng) {
  const int n = fam.vertex_count();
  std::vector<int> vperm(n), cperm(n);
  for (int i = 0; i < n; ++i) vperm[i] = cperm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(vperm[i], vperm[rng.below(i + 1)]);
    std::swap(cperm[i], cperm[rng.below(i + 1)]);
  }
  GraphFamily out(n);
  for (ColorId c = 0; c < n; ++c)
    for (auto [u, v] : fam.edge_list(c)) out.add_edge(cperm[c], vperm[u], vperm[v]);
  return out;
}

}  // namespace rainbow::testsupport
