#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/bitset.hpp"

namespace rainbow {

// Ids are 0-based everywhere in code and in file formats; human-readable
// summaries print them 1-based, the usual convention in the literature.
using VertexId = int;
using ColorId = int;

// A family of n graphs ("colors") on one shared n-vertex set.  Members may
// coincide; every graph is simple and undirected.  Adjacency is stored as a
// bit row per (color, vertex), which is what the search and reroute kernels
// intersect against.
//
// A family is mutable only while being built (add_edge); every operation in
// the library takes it by const reference and performs pure reads, so a
// constructed family can be shared freely across threads.
class GraphFamily {
public:
  explicit GraphFamily(int n);

  int vertex_count() const { return n_; }
  int color_count() const { return n_; }

  void add_edge(ColorId color, VertexId u, VertexId v);
  bool has_edge(ColorId color, VertexId u, VertexId v) const;

  const Bitset& neighbors(ColorId color, VertexId v) const;

  // Edges of one member graph, as (u, v) pairs with u < v, ascending.
  std::vector<std::pair<VertexId, VertexId>> edge_list(ColorId color) const;

  void check_vertex(VertexId v) const;
  void check_color(ColorId c) const;

private:
  int n_;
  std::vector<std::vector<Bitset>> adj_;  // adj_[color][vertex]
};

// d_color(v) = |N_{G_color}(v)|
int degree(const GraphFamily& family, ColorId color, VertexId v);

// c(uv): the set of colors whose graph contains the edge uv.
Bitset color_set(const GraphFamily& family, VertexId u, VertexId v);

// An edge present in every graph of the family.
bool is_strong_edge(const GraphFamily& family, VertexId u, VertexId v);

// The pair and colors realizing the Ore-type minimum: uv is missing from
// G_i, and d_p(u) + d_q(v) equals the reported value.
struct SigmaWitness {
  VertexId u = -1;
  VertexId v = -1;
  ColorId i = -1;  // a color missing the edge uv
  ColorId p = -1;
  ColorId q = -1;
  int value = 0;

  friend bool operator==(const SigmaWitness&, const SigmaWitness&) = default;
};

// sigma(F) = min d_p(u) + d_q(v) over pairs uv absent from at least one
// member graph and over all p, q independently.  When every pair is present
// in every color the minimum ranges over the empty set: the value is
// infinite and there is no witness, and any threshold is satisfied.
struct SigmaValue {
  std::optional<SigmaWitness> witness;

  bool is_infinite() const { return !witness.has_value(); }
  int value() const { return witness ? witness->value : 0; }
  bool at_least(int threshold) const { return is_infinite() || witness->value >= threshold; }
};

SigmaValue sigma(const GraphFamily& family);

// FNV-1a over the canonical serialization (n, then each color's sorted edge
// list); identifies a family in reports.
std::uint64_t family_digest(const GraphFamily& family);

}  // namespace rainbow
