#include "rainbow/family.hpp"

#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

GraphFamily::GraphFamily(int n) : n_(n) {
  if (n < 1) throw UsageError("family needs at least one vertex, got n=" + std::to_string(n));
  adj_.assign(n_, std::vector<Bitset>(n_, Bitset(n_)));
}

void GraphFamily::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_)
    throw UsageError("vertex id " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

void GraphFamily::check_color(ColorId c) const {
  if (c < 0 || c >= n_)
    throw UsageError("color id " + std::to_string(c) + " out of range [0," + std::to_string(n_) + ")");
}

void GraphFamily::add_edge(ColorId color, VertexId u, VertexId v) {
  check_color(color);
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  adj_[color][u].set(v);
  adj_[color][v].set(u);
}

bool GraphFamily::has_edge(ColorId color, VertexId u, VertexId v) const {
  check_color(color);
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return adj_[color][u].test(v);
}

const Bitset& GraphFamily::neighbors(ColorId color, VertexId v) const {
  check_color(color);
  check_vertex(v);
  return adj_[color][v];
}

std::vector<std::pair<VertexId, VertexId>> GraphFamily::edge_list(ColorId color) const {
  check_color(color);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v = adj_[color][u].next(u + 1); v >= 0; v = adj_[color][u].next(v + 1))
      edges.emplace_back(u, v);
  return edges;
}

int degree(const GraphFamily& family, ColorId color, VertexId v) {
  return family.neighbors(color, v).count();
}

Bitset color_set(const GraphFamily& family, VertexId u, VertexId v) {
  family.check_vertex(u);
  family.check_vertex(v);
  if (u == v) throw UsageError("color_set needs two distinct vertices, got " + std::to_string(u) + " twice");
  Bitset cs(family.color_count());
  for (ColorId c = 0; c < family.color_count(); ++c)
    if (family.has_edge(c, u, v)) cs.set(c);
  return cs;
}

bool is_strong_edge(const GraphFamily& family, VertexId u, VertexId v) {
  return color_set(family, u, v).count() == family.color_count();
}

SigmaValue sigma(const GraphFamily& family) {
  const int n = family.vertex_count();
  const int t = family.color_count();

  // p and q range over all colors independently, so the inner minimum
  // decouples into per-vertex minima.  Smallest color wins ties.
  std::vector<int> min_deg(n), arg_min(n);
  for (VertexId v = 0; v < n; ++v) {
    int best = degree(family, 0, v), arg = 0;
    for (ColorId c = 1; c < t; ++c) {
      int d = degree(family, c, v);
      if (d < best) {
        best = d;
        arg = c;
      }
    }
    min_deg[v] = best;
    arg_min[v] = arg;
  }

  std::optional<SigmaWitness> best;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      Bitset cs = color_set(family, u, v);
      if (cs.count() == t) continue;  // present everywhere: not in scope
      ColorId missing = 0;
      while (cs.test(missing)) ++missing;
      int value = min_deg[u] + min_deg[v];
      if (!best || value < best->value)
        best = SigmaWitness{u, v, missing, arg_min[u], arg_min[v], value};
    }
  }
  return SigmaValue{best};
}

std::uint64_t family_digest(const GraphFamily& family) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(family.vertex_count()));
  for (ColorId c = 0; c < family.color_count(); ++c) {
    for (auto [u, v] : family.edge_list(c)) {
      mix(static_cast<std::uint64_t>(u));
      mix(static_cast<std::uint64_t>(v));
    }
    mix(0xffffffffffffffffULL);  // color separator
  }
  return h;
}

}  // namespace rainbow
