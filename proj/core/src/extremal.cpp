#include "rainbow/extremal.hpp"

#include "rainbow/errors.hpp"

namespace rainbow {

GraphFamily make_balanced_bipartite_family(int n) {
  if (n < 4 || n % 2 != 0)
    throw UsageError("balanced bipartite family needs even n >= 4, got n=" + std::to_string(n));
  GraphFamily fam(n);
  const int half = n / 2;
  for (ColorId c = 0; c < n; ++c)
    for (VertexId u = 0; u < half; ++u)
      for (VertexId v = half; v < n; ++v) fam.add_edge(c, u, v);
  return fam;
}

GraphFamily make_joined_split_family(int n) {
  if (n < 7 || n % 3 != 1)
    throw UsageError("joined split family needs n = 1 (mod 3), n >= 7, got n=" + std::to_string(n));
  GraphFamily fam(n);
  const int t = (n + 2) / 3;      // independent set 1..t
  const VertexId apex = 0;        // the K_1 part of the union
  const int clique_lo = t + 1;    // clique t+1..n-1, size m = (2n-5)/3
  for (ColorId c = 0; c < n; ++c) {
    for (VertexId s = 1; s <= t; ++s) {
      fam.add_edge(c, s, apex);  // join: independent set to apex
      for (VertexId w = clique_lo; w < n; ++w) fam.add_edge(c, s, w);  // join to clique
    }
    for (VertexId w = clique_lo; w < n; ++w)
      for (VertexId w2 = w + 1; w2 < n; ++w2) fam.add_edge(c, w, w2);
  }
  return fam;
}

ExceptionEvidence detect_bipartite_exception(const GraphFamily& family) {
  const int n = family.vertex_count();
  ExceptionEvidence ev;

  if (n % 2 != 0) {
    ev.detail = "vertex count " + std::to_string(n) + " is odd";
    return ev;
  }

  for (ColorId c = 1; c < family.color_count(); ++c)
    for (VertexId v = 0; v < n; ++v)
      if (!(family.neighbors(c, v) == family.neighbors(0, v))) {
        ev.detail = "graphs not identical: graphs 0 and " + std::to_string(c) +
                    " differ at vertex " + std::to_string(v);
        return ev;
      }

  // All graphs equal G_0.  If G_0 is complete bipartite, one side must be
  // exactly the non-neighborhood of vertex 0 (including 0 itself).
  std::vector<VertexId> side_a, side_b;
  const Bitset& nbr0 = family.neighbors(0, 0);
  for (VertexId v = 0; v < n; ++v) (nbr0.test(v) ? side_b : side_a).push_back(v);

  if (static_cast<int>(side_a.size()) != n / 2) {
    ev.detail = "not balanced: vertex 0 has degree " + std::to_string(nbr0.count()) +
                " in every graph, expected " + std::to_string(n / 2);
    return ev;
  }

  std::vector<bool> in_a(n, false);
  for (VertexId v : side_a) in_a[v] = true;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      bool cross = in_a[u] != in_a[v];
      bool edge = family.has_edge(0, u, v);
      if (cross && !edge) {
        ev.detail = "not complete across the bipartition: edge (" + std::to_string(u) + "," +
                    std::to_string(v) + ") missing";
        return ev;
      }
      if (!cross && edge) {
        ev.detail = "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") lies inside one side of the bipartition";
        return ev;
      }
    }
  }

  ev.verdict = true;
  ev.side_a = std::move(side_a);
  ev.side_b = std::move(side_b);
  ev.detail = "all graphs equal the complete bipartite graph on the recorded sides";
  return ev;
}

}  // namespace rainbow
