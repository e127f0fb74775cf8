#include "rainbow/rotation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rainbow/errors.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

namespace {

int mod(int k, int l) { return ((k % l) + l) % l; }

std::string edge_str(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Bitset colors_on(const RainbowCycleCert& cert, int ncolors) {
  Bitset used(ncolors);
  for (ColorId c : cert.colors) used.set(c);
  return used;
}

std::vector<ColorId> colors_off(const RainbowCycleCert& cert, int ncolors) {
  Bitset used = colors_on(cert, ncolors);
  std::vector<ColorId> off;
  for (ColorId c = 0; c < ncolors; ++c)
    if (!used.test(c)) off.push_back(c);
  return off;
}

// Candidate chord colors: the named freed colors first, then every color not
// on the cycle, ascending, without repeats.
std::vector<ColorId> color_pool(std::initializer_list<ColorId> primaries,
                                const std::vector<ColorId>& off_cycle) {
  std::vector<ColorId> pool;
  for (ColorId c : primaries)
    if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(c);
  for (ColorId c : off_cycle)
    if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(c);
  return pool;
}

// Final gate for every harvested cycle: it must verify against the family
// and pass through `must_contain`.  A branch whose construction fails here
// simply does not fire.
std::optional<RainbowCycleCert> verified(const GraphFamily& fam, RainbowCycleCert cert,
                                         VertexId must_contain) {
  if (!cert_contains(cert, must_contain)) return std::nullopt;
  if (!verify_cycle_cert(fam, cert).empty()) return std::nullopt;
  return cert;
}

struct EdgeSpec {
  VertexId u;
  VertexId v;
  ColorId color;
};

// Rebuilds a cycle from a base certificate by dropping vertices and edges
// (given as base positions) and adding replacement edges, which may touch
// vertices outside the base cycle.  The surgery is validated structurally
// (every touched vertex of degree exactly 2, one closed walk) and then
// verified as a rainbow cycle; anything else returns nullopt.  This one
// harvester covers the degenerate reroutes where a chord coincides with a
// dropped cycle edge and simply recolors it.
std::optional<RainbowCycleCert> rebuild_cycle(const GraphFamily& fam, const RainbowCycleCert& base,
                                              const std::vector<int>& dropped_vertices,
                                              const std::vector<int>& dropped_edges,
                                              const std::vector<EdgeSpec>& added,
                                              VertexId must_contain) {
  const int l = base.length();
  std::vector<char> edrop(l, 0);
  for (int p : dropped_edges) edrop[mod(p, l)] = 1;

  std::map<VertexId, std::vector<std::pair<VertexId, ColorId>>> adj;
  auto link = [&adj](VertexId a, VertexId b, ColorId c) {
    adj[a].push_back({b, c});
    adj[b].push_back({a, c});
  };
  for (int k = 0; k < l; ++k) {
    if (edrop[k]) continue;
    link(base.vertices[k], base.vertices[(k + 1) % l], base.colors[k]);
  }
  for (const EdgeSpec& e : added) link(e.u, e.v, e.color);

  for (int p : dropped_vertices)
    if (adj.count(base.vertices[mod(p, l)])) return std::nullopt;
  if (!adj.count(must_contain)) return std::nullopt;
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) return std::nullopt;

  RainbowCycleCert out;
  const std::size_t total = adj.size();
  VertexId prev = -1, cur = must_contain;
  do {
    if (out.vertices.size() > total) return std::nullopt;
    auto& nb = adj[cur];
    int pick;
    if (prev == -1) {
      pick = nb[0] <= nb[1] ? 0 : 1;  // deterministic start direction
    } else if (nb[0].first != prev) {
      pick = 0;
    } else if (nb[1].first != prev) {
      pick = 1;
    } else {
      return std::nullopt;  // parallel edges
    }
    out.vertices.push_back(cur);
    out.colors.push_back(nb[pick].second);
    prev = cur;
    cur = nb[pick].first;
  } while (cur != must_contain);
  if (out.vertices.size() != total) return std::nullopt;  // more than one cycle
  return verified(fam, std::move(out), must_contain);
}

// |left| + |right| > universe forces a common position; failing that means
// the index bookkeeping is wrong, which must stop the run, not degrade it.
void certify_pigeonhole(const ChordIndexSets& sets) {
  if (static_cast<int>(sets.left.size() + sets.right.size()) > sets.universe_size &&
      sets.common.empty())
    throw TheoremViolation("pigeonhole certification failed in " + sets.context + ": |left|=" +
                           std::to_string(sets.left.size()) + " + |right|=" +
                           std::to_string(sets.right.size()) + " exceeds universe " +
                           std::to_string(sets.universe_size) + " yet no common position");
}

void intersect_sets(ChordIndexSets& sets) {
  std::set<int> right(sets.right.begin(), sets.right.end());
  for (int j : sets.left)
    if (right.count(j)) sets.common.push_back(j);
}

// Index sets for the wide skip-two pattern anchored at (a, a+3): candidate
// dropped-edge positions range over every position outside {a, a+1, a+2},
// on both arcs, including the two half-degenerate ends where a chord
// re-colors the edge it replaces.
ChordIndexSets wide_skip_two_sets(const GraphFamily& fam, const RainbowCycleCert& cyc, int a_pos,
                                  ColorId c1, ColorId c2, const std::string& context) {
  const int l = cyc.length();
  const int b_pos = mod(a_pos + 3, l);
  ChordIndexSets sets;
  sets.context = context;
  sets.anchor_a = a_pos;
  sets.anchor_b = b_pos;
  sets.color_a = c1;
  sets.color_b = c2;
  sets.universe_size = l - 3;
  const VertexId xa = cyc.vertices[a_pos], xb = cyc.vertices[b_pos];
  for (int j = 0; j < l; ++j) {
    if (j == a_pos || j == mod(a_pos + 1, l) || j == mod(a_pos + 2, l)) continue;
    if (fam.has_edge(c1, xa, cyc.vertices[j])) sets.left.push_back(j);
    if (fam.has_edge(c2, xb, cyc.vertices[(j + 1) % l])) sets.right.push_back(j);
  }
  intersect_sets(sets);
  certify_pigeonhole(sets);
  return sets;
}

std::optional<RainbowCycleCert> harvest_skip_two(const GraphFamily& fam,
                                                 const RainbowCycleCert& cyc, int a_pos, int j,
                                                 ColorId c1, ColorId c2, VertexId must_contain) {
  const int l = cyc.length();
  const int b_pos = mod(a_pos + 3, l);
  return rebuild_cycle(fam, cyc, {mod(a_pos + 1, l), mod(a_pos + 2, l)},
                       {a_pos, mod(a_pos + 1, l), mod(a_pos + 2, l), j},
                       {{cyc.vertices[a_pos], cyc.vertices[j], c1},
                        {cyc.vertices[b_pos], cyc.vertices[(j + 1) % l], c2}},
                       must_contain);
}

// Index sets for the skip-one pattern that drops the single vertex at
// position s: anchors are its cycle neighbors, the chords take the two
// freed colors, and the universe leaves out the two dropped edges.
ChordIndexSets skip_one_sets(const GraphFamily& fam, const RainbowCycleCert& cyc, int s,
                             const std::string& context) {
  const int l = cyc.length();
  const int p = mod(s - 1, l), q = mod(s + 1, l);
  ChordIndexSets sets;
  sets.context = context;
  sets.anchor_a = p;
  sets.anchor_b = q;
  sets.color_a = cyc.colors[s];          // first chord reuses the color freed at (x_s, x_{s+1})
  sets.color_b = cyc.colors[mod(s - 1, l)];  // second the color freed at (x_{s-1}, x_s)
  sets.universe_size = l - 2;
  const VertexId xp = cyc.vertices[p], xq = cyc.vertices[q];
  for (int j = 0; j < l; ++j) {
    bool left_ok = j != p && j != s && j != q;
    bool right_ok = j != mod(s - 2, l) && j != mod(s - 1, l) && j != s;
    if (left_ok && fam.has_edge(sets.color_a, xp, cyc.vertices[j])) sets.left.push_back(j);
    if (right_ok && fam.has_edge(sets.color_b, xq, cyc.vertices[(j + 1) % l]))
      sets.right.push_back(j);
  }
  intersect_sets(sets);
  certify_pigeonhole(sets);
  return sets;
}

std::optional<RainbowCycleCert> harvest_skip_one(const GraphFamily& fam,
                                                 const RainbowCycleCert& cyc, int s, int j,
                                                 const ChordIndexSets& sets,
                                                 VertexId must_contain) {
  const int l = cyc.length();
  return rebuild_cycle(fam, cyc, {s}, {mod(s - 1, l), s, j},
                       {{cyc.vertices[sets.anchor_a], cyc.vertices[j], sets.color_a},
                        {cyc.vertices[sets.anchor_b], cyc.vertices[(j + 1) % l], sets.color_b}},
                       must_contain);
}

// Closes an open rainbow path y_0..y_{m-1} into an m-cycle: either the
// endpoint chord in a color the path leaves free, or a crossing chord pair
// (y_0, y_{d+1}) + (y_{m-1}, y_d) found by pigeonhole over the path edges.
std::optional<RainbowCycleCert> close_path(const GraphFamily& fam,
                                           const std::vector<VertexId>& pv,
                                           const std::vector<ColorId>& pc, VertexId must_contain) {
  const int m = static_cast<int>(pv.size());
  if (m < 3) return std::nullopt;
  const int ncolors = fam.color_count();
  Bitset used(ncolors);
  for (ColorId c : pc) used.set(c);
  std::vector<ColorId> free;
  for (ColorId c = 0; c < ncolors; ++c)
    if (!used.test(c)) free.push_back(c);

  for (ColorId f : free) {
    if (!fam.has_edge(f, pv[0], pv[m - 1])) continue;
    RainbowCycleCert out{pv, pc};
    out.colors.push_back(f);
    if (auto cert = verified(fam, std::move(out), must_contain)) return cert;
  }

  for (std::size_t si = 0; si < free.size(); ++si) {
    for (std::size_t ti = 0; ti < free.size(); ++ti) {
      if (si == ti) continue;
      const ColorId cs = free[si], ct = free[ti];
      ChordIndexSets sets;
      sets.context = "path-closing chord pair";
      sets.anchor_a = m - 1;
      sets.anchor_b = 0;
      sets.color_a = cs;
      sets.color_b = ct;
      sets.universe_size = m - 1;  // dropped-edge slots 0..m-2
      for (int d = 2; d <= m - 2; ++d)
        if (fam.has_edge(cs, pv[m - 1], pv[d])) sets.left.push_back(d);
      for (int d = 0; d <= m - 3; ++d)
        if (fam.has_edge(ct, pv[0], pv[d + 1])) sets.right.push_back(d);
      intersect_sets(sets);
      certify_pigeonhole(sets);
      for (int d : sets.common) {
        // y_0 -> y_{d+1} -> ... -> y_{m-1} -> y_d -> y_{d-1} -> ... -> y_0
        RainbowCycleCert out;
        out.vertices.push_back(pv[0]);
        out.colors.push_back(ct);
        for (int k = d + 1; k <= m - 1; ++k) {
          out.vertices.push_back(pv[k]);
          out.colors.push_back(k == m - 1 ? cs : pc[k]);
        }
        for (int k = d; k >= 1; --k) {
          out.vertices.push_back(pv[k]);
          out.colors.push_back(pc[k - 1]);
        }
        if (auto cert = verified(fam, std::move(out), must_contain)) return cert;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RerouteOutcome chord_pair_reroute(const GraphFamily& fam, const RainbowCycleCert& cycle,
                                  int a_pos, int b_pos, ColorId c1, ColorId c2) {
  auto bad = [](const std::string& clause) { throw UsageError("chord_pair_reroute: " + clause); };
  if (!verify_cycle_cert(fam, cycle).empty()) bad("cycle cert is not a valid rainbow cycle");
  const int l = cycle.length();
  if (a_pos < 0 || a_pos >= l || b_pos < 0 || b_pos >= l) bad("anchor position out of range");
  fam.check_color(c1);
  fam.check_color(c2);
  if (c1 == c2) bad("c1 = c2: the two chords need distinct colors");
  if (b_pos != mod(a_pos + 3, l)) bad("b_pos must be a_pos + 3 along the cycle");
  for (int k = 0; k < l; ++k) {
    if (k == a_pos || k == mod(a_pos + 1, l) || k == mod(a_pos + 2, l)) continue;
    if (cycle.colors[k] == c1 || cycle.colors[k] == c2)
      bad("chord color " + std::to_string(cycle.colors[k]) +
          " is already used by a retained cycle edge");
  }

  // Candidate dropped-edge positions j pair the chords (x_a, x_j) and
  // (x_b, x_{j+1}).  The left range stops one short of a, the right range
  // starts at b, so their union covers l-3 slots and any overlap sits in the
  // strict interior of the retained arc: the reroute never recolors a
  // retained edge.
  ChordIndexSets sets;
  sets.context = "skip-two chord-pair reroute";
  sets.anchor_a = a_pos;
  sets.anchor_b = b_pos;
  sets.color_a = c1;
  sets.color_b = c2;
  sets.universe_size = l - 3;
  const VertexId xa = cycle.vertices[a_pos], xb = cycle.vertices[b_pos];
  for (int off = 1; off <= l - 4; ++off) {
    int j = mod(b_pos + off, l);
    if (fam.has_edge(c1, xa, cycle.vertices[j])) sets.left.push_back(j);
  }
  for (int off = 0; off <= l - 5; ++off) {
    int j = mod(b_pos + off, l);
    if (fam.has_edge(c2, xb, cycle.vertices[(j + 1) % l])) sets.right.push_back(j);
  }
  {
    std::set<int> right(sets.right.begin(), sets.right.end());
    for (int j : sets.left)  // left is already in ascending offset order
      if (right.count(j)) sets.common.push_back(j);
  }
  certify_pigeonhole(sets);

  RerouteOutcome out;
  for (int j : sets.common) {
    if (auto cert = harvest_skip_two(fam, cycle, a_pos, j, c1, c2, xa)) {
      out.cycle = std::move(cert);
      break;
    }
  }
  out.sets = std::move(sets);
  return out;
}

RainbowCycleCert strong_edge_relabel(const GraphFamily& fam, const RainbowCycleCert& cycle,
                                     int edge_pos, ColorId target_color) {
  if (!verify_cycle_cert(fam, cycle).empty())
    throw UsageError("strong_edge_relabel: cycle cert is not a valid rainbow cycle");
  const int l = cycle.length();
  if (edge_pos < 0 || edge_pos >= l) throw UsageError("strong_edge_relabel: edge position out of range");
  fam.check_color(target_color);
  for (int k = 0; k < l; ++k) {
    VertexId u = cycle.vertices[k], v = cycle.vertices[(k + 1) % l];
    if (!is_strong_edge(fam, u, v))
      throw PreconditionError("strong_edge_relabel: cycle edge " + edge_str(u, v) +
                              " at position " + std::to_string(k) + " is not a strong edge");
  }

  if (cycle.colors[edge_pos] == target_color) return cycle;

  int holder = -1;
  for (int k = 0; k < l; ++k)
    if (cycle.colors[k] == target_color) {
      holder = k;
      break;
    }

  RainbowCycleCert out = cycle;
  if (holder < 0) {
    // Target color not on the cycle: the zero-length shift.
    out.colors[edge_pos] = target_color;
    return out;
  }
  // Walk the segment from edge_pos forward to the holder: the target color
  // jumps to edge_pos and every edge strictly inside the segment inherits its
  // predecessor's color.  All edges are strong, so each new assignment holds.
  for (int k = holder; k != edge_pos; k = mod(k - 1, l)) out.colors[k] = cycle.colors[mod(k - 1, l)];
  out.colors[edge_pos] = target_color;
  return out;
}

ReduceByOneResult reduce_by_one(const GraphFamily& fam, const RainbowCycleCert& ham, VertexId v) {
  const int n = fam.vertex_count();
  fam.check_vertex(v);
  if (!verify_cycle_cert(fam, ham).empty())
    throw UsageError("reduce_by_one: Hamiltonian cert is not a valid rainbow cycle");
  if (ham.length() != n)
    throw UsageError("reduce_by_one: cert has length " + std::to_string(ham.length()) +
                     ", expected a Hamiltonian cycle of length " + std::to_string(n));
  if (n < 4) throw UsageError("reduce_by_one: needs n >= 4");
  SigmaValue s = sigma(fam);
  if (!s.at_least(n))
    throw PreconditionError("reduce_by_one: sigma = " + std::to_string(s.value()) + " < n = " +
                            std::to_string(n) + "; the degree-sum hypothesis does not hold");

  const RainbowCycleCert base = rotated_to(ham, v);
  const auto& X = base.vertices;
  const auto& phi = base.colors;
  auto at = [&](int k) { return X[mod(k, n)]; };
  auto col = [&](int k) { return phi[mod(k, n)]; };

  // Direct distance-2 chords: skip one non-anchor vertex, color the chord
  // with one of the two freed colors.
  for (int sp = 1; sp < n; ++sp) {
    for (ColorId c : {col(sp - 1), col(sp)}) {
      if (!fam.has_edge(c, at(sp - 1), at(sp + 1))) continue;
      auto cert = rebuild_cycle(fam, base, {sp}, {mod(sp - 1, n), sp},
                                {{at(sp - 1), at(sp + 1), c}}, v);
      if (cert) return *cert;
    }
  }

  // Chord-pair pigeonhole around each skipped vertex.
  for (int sp = 1; sp < n; ++sp) {
    ChordIndexSets sets = skip_one_sets(fam, base, sp, "skip-one chord pair dropping position " +
                                                           std::to_string(sp));
    for (int j : sets.common)
      if (auto cert = harvest_skip_one(fam, base, sp, j, sets, v)) return *cert;
  }

  // The chord joining v's two cycle neighbors cannot be used to drop v
  // itself; instead it reroutes C_n into an (n-1)-vertex path that ends at v
  // and skips one vertex near v, and the path is then closed into a cycle.
  {
    Bitset chord_colors = color_set(fam, at(1), at(n - 1));
    for (ColorId a = chord_colors.next(0); a >= 0; a = chord_colors.next(a + 1)) {
      int ka = -1;  // position whose edge carries color a (Hamiltonian: always exists)
      for (int k = 0; k < n; ++k)
        if (phi[k] == a) {
          ka = k;
          break;
        }

      std::vector<VertexId> pv;
      std::vector<ColorId> pc;
      if (ka <= n - 4) {
        // Path v, x_{n-1}, x_1, x_2, ..., x_{n-3}, dropping x_{n-2}.  If the
        // chord stole a retained edge's color, that edge takes the color
        // freed at (v, x_1) instead; the membership is checked, not assumed.
        ColorId recolor_to = col(0);
        pv.push_back(at(0));
        pc.push_back(col(n - 1));
        pv.push_back(at(n - 1));
        pc.push_back(a);
        pv.push_back(at(1));
        bool ok = true;
        for (int k = 1; k <= n - 4; ++k) {
          ColorId ck = col(k);
          if (ck == a) {
            if (!fam.has_edge(recolor_to, at(k), at(k + 1))) {
              ok = false;
              break;
            }
            ck = recolor_to;
          }
          pc.push_back(ck);
          pv.push_back(at(k + 1));
        }
        if (!ok) continue;
      } else {
        // Path v, x_1, x_{n-1}, x_{n-2}, ..., x_3, dropping x_2; conflicts
        // recolor to the color freed at (x_{n-1}, v).
        ColorId recolor_to = col(n - 1);
        pv.push_back(at(0));
        pc.push_back(col(0));
        pv.push_back(at(1));
        pc.push_back(a);
        pv.push_back(at(n - 1));
        bool ok = true;
        for (int k = n - 2; k >= 3; --k) {
          ColorId ck = col(k);
          if (ck == a) {
            if (!fam.has_edge(recolor_to, at(k), at(k + 1))) {
              ok = false;
              break;
            }
            ck = recolor_to;
          }
          pc.push_back(ck);
          pv.push_back(at(k));
        }
        if (!ok) continue;
      }
      if (auto cert = close_path(fam, pv, pc, v)) return *cert;
    }
  }

  ExceptionEvidence ev = detect_bipartite_exception(fam);
  if (ev.verdict) return ev;

  if (auto cert = find_rainbow_cycle(fam, n - 1, v)) return *cert;

  throw TheoremViolation(
      "reduce_by_one: sigma >= n yet no rainbow (n-1)-cycle through vertex " + std::to_string(v) +
      " exists and the family is not the balanced-bipartite exception");
}

namespace {

// A detour cycle of length l-1: [x_0, z, x_3, x_4, ..., x_{l-1}] where z is
// x_1, x_2, or a vertex off the cycle bridged by two chords.
struct DetourForm {
  RainbowCycleCert cert;
  VertexId z = -1;
  ColorId into_z = -1;  // color of (x_0, z)
  ColorId out_z = -1;   // color of (z, x_3)
  bool z_outside = false;
};

// Enumerates detour forms in deterministic order and feeds each to `sink`;
// stops when the sink reports success.
template <typename Sink>
bool for_each_detour(const GraphFamily& fam, const RainbowCycleCert& base, VertexId v,
                     const std::vector<ColorId>& off_cycle, Sink&& sink) {
  const int l = base.length();
  const auto& X = base.vertices;
  const auto& phi = base.colors;

  auto try_form = [&](std::optional<RainbowCycleCert> cert, VertexId z, ColorId cin, ColorId cout,
                      bool outside) {
    if (!cert) return false;
    return sink(DetourForm{std::move(*cert), z, cin, cout, outside});
  };

  // z = x_2: chord (x_0, x_2) replaces the two edges at x_1.
  for (ColorId c : color_pool({phi[0], phi[1]}, off_cycle)) {
    if (!fam.has_edge(c, X[0], X[2])) continue;
    auto cert = rebuild_cycle(fam, base, {1}, {0, 1}, {{X[0], X[2], c}}, v);
    if (try_form(std::move(cert), X[2], c, phi[2], false)) return true;
  }
  // z = x_1: chord (x_1, x_3) replaces the two edges at x_2.
  for (ColorId c : color_pool({phi[2], phi[1]}, off_cycle)) {
    if (!fam.has_edge(c, X[1], X[3])) continue;
    auto cert = rebuild_cycle(fam, base, {2}, {1, 2}, {{X[1], X[3], c}}, v);
    if (try_form(std::move(cert), X[1], phi[0], c, false)) return true;
  }
  // z off the cycle, bridging x_0 to x_3 and skipping x_1, x_2.
  if (l < fam.vertex_count()) {
    Bitset on(fam.vertex_count());
    for (VertexId u : X) on.set(u);
    for (ColorId cout : color_pool({phi[2]}, off_cycle)) {
      for (VertexId y = 0; y < fam.vertex_count(); ++y) {
        if (on.test(y)) continue;
        if (!fam.has_edge(phi[0], X[0], y) || !fam.has_edge(cout, y, X[3])) continue;
        auto cert = rebuild_cycle(fam, base, {1, 2}, {0, 1, 2},
                                  {{X[0], y, phi[0]}, {y, X[3], cout}}, v);
        if (try_form(std::move(cert), y, phi[0], cout, true)) return true;
      }
    }
  }
  return false;
}

}  // namespace

ReduceOutcome reduce_by_two(const GraphFamily& fam, const RainbowCycleCert& cyc, VertexId v) {
  const int n = fam.vertex_count();
  fam.check_vertex(v);
  auto bad = [](const std::string& clause) { throw UsageError("reduce_by_two: " + clause); };
  if (!verify_cycle_cert(fam, cyc).empty()) bad("cycle cert is not a valid rainbow cycle");
  if (!cert_contains(cyc, v)) bad("vertex " + std::to_string(v) + " is not on the cycle");
  if (cyc.length() < 8)
    bad("cycle length " + std::to_string(cyc.length()) + " < 8; the two-step reduction needs l >= 8");
  if (!sigma(fam).at_least(n)) bad("sigma < n; the degree-sum hypothesis does not hold");

  const RainbowCycleCert base = rotated_to(cyc, v);
  const int l = base.length();
  const auto& X = base.vertices;
  const auto& phi = base.colors;
  const std::vector<ColorId> off_cycle = colors_off(base, n);

  ReduceOutcome out;
  auto miss = [&out](const std::string& branch) { out.failed_branches.push_back(branch); };

  // Short chord spanning x_0..x_3.
  for (ColorId c : color_pool({phi[0], phi[1], phi[2]}, off_cycle)) {
    if (!fam.has_edge(c, X[0], X[3])) continue;
    if ((out.cycle = rebuild_cycle(fam, base, {1, 2}, {0, 1, 2}, {{X[0], X[3], c}}, v))) return out;
  }
  miss("direct chord x_0-x_3");

  // Strict chord-pair reroute anchored at x_0/x_3, chords in the colors
  // freed at (x_0, x_1) and (x_2, x_3).
  {
    RerouteOutcome ro = chord_pair_reroute(fam, base, 0, 3, phi[0], phi[2]);
    if (ro.cycle) {
      out.cycle = std::move(ro.cycle);
      return out;
    }
    miss("chord-pair reroute at x_0/x_3");
  }

  // Short chord spanning x_4..x_7.
  for (ColorId c : color_pool({phi[4], phi[5], phi[6]}, off_cycle)) {
    if (!fam.has_edge(c, X[4], X[7])) continue;
    if ((out.cycle = rebuild_cycle(fam, base, {5, 6}, {4, 5, 6}, {{X[4], X[7], c}}, v))) return out;
  }
  miss("direct chord x_4-x_7");

  // Wide chord-pair pigeonhole anchored at x_4/x_7: candidate positions on
  // both arcs, first chord in the freed color of (x_4, x_5) or any color off
  // the cycle, second chord in the freed color of (x_7, x_8).
  for (ColorId c1 : color_pool({phi[4]}, off_cycle)) {
    ChordIndexSets sets = wide_skip_two_sets(fam, base, 4, c1, phi[6],
                                             "wide chord pair at x_4/x_7");
    for (int j : sets.common) {
      if ((out.cycle = harvest_skip_two(fam, base, 4, j, c1, phi[6], v))) return out;
    }
  }
  miss("wide chord pair at x_4/x_7");

  // Detour forms of length l-1, each probed for the three finishing moves.
  bool any_detour = false;
  Bitset on(fam.vertex_count());
  for (VertexId u : X) on.set(u);
  bool done = for_each_detour(fam, base, v, off_cycle, [&](const DetourForm& d) {
    any_detour = true;
    const std::vector<ColorId> d_off = colors_off(d.cert, n);

    // Drop x_5 from the detour: chord (x_4, x_6).
    for (ColorId c : color_pool({phi[4], phi[5]}, d_off)) {
      if (!fam.has_edge(c, X[4], X[6])) continue;
      if ((out.cycle = rebuild_cycle(fam, d.cert, {4}, {3, 4}, {{X[4], X[6], c}}, v))) return true;
    }
    // Drop x_6 from the detour: chord (x_5, x_7).
    for (ColorId c : color_pool({phi[6], phi[5]}, d_off)) {
      if (!fam.has_edge(c, X[5], X[7])) continue;
      if ((out.cycle = rebuild_cycle(fam, d.cert, {5}, {4, 5}, {{X[5], X[7], c}}, v))) return true;
    }
    // Bridge x_4 to x_7 through a vertex w off the cycle.
    if (l < n) {
      for (ColorId c1 : color_pool({phi[4]}, off_cycle)) {
        for (VertexId w = 0; w < n; ++w) {
          if (on.test(w)) continue;
          if (!fam.has_edge(c1, X[4], w) || !fam.has_edge(phi[6], w, X[7])) continue;
          if (w == d.z) {
            // The detour vertex itself: cut straight from z to x_4.
            RainbowCycleCert cand;
            cand.vertices = {X[0], d.z};
            cand.colors = {d.into_z, c1};
            for (int k = 4; k < l; ++k) {
              cand.vertices.push_back(X[k]);
              cand.colors.push_back(phi[k]);
            }
            if ((out.cycle = verified(fam, std::move(cand), v))) return true;
          } else {
            RainbowCycleCert cand;
            cand.vertices = {X[0], d.z, X[3], X[4], w};
            cand.colors = {d.into_z, d.out_z, phi[3], c1, phi[6]};
            for (int k = 7; k < l; ++k) {
              cand.vertices.push_back(X[k]);
              cand.colors.push_back(phi[k]);
            }
            if ((out.cycle = verified(fam, std::move(cand), v))) return true;
          }
        }
      }
    }
    return false;
  });
  if (done) return out;
  miss(any_detour ? "finishing moves on the length-(l-1) detour" : "no length-(l-1) detour cycle");

  return out;
}

namespace {

VertexPancyclicResult oracle_pancyclic(const GraphFamily& fam, VertexId v);
VertexPancyclicResult exception_path(const GraphFamily& fam, VertexId v,
                                     const RainbowCycleCert& ham, ExceptionEvidence ev);

struct SwitchToException {
  ExceptionEvidence ev;
};

}  // namespace

ReduceOutcome find_c5_through(const GraphFamily& fam, VertexId v,
                              std::optional<RainbowCycleCert> base7) {
  const int n = fam.vertex_count();
  fam.check_vertex(v);
  if (n < 5) throw UsageError("find_c5_through: needs n >= 5");
  if (!sigma(fam).at_least(n))
    throw UsageError("find_c5_through: sigma < n; the degree-sum hypothesis does not hold");

  ReduceOutcome out;
  auto miss = [&out](const std::string& branch) { out.failed_branches.push_back(branch); };

  if (base7) {
    if (!verify_cycle_cert(fam, *base7).empty())
      throw UsageError("find_c5_through: supplied base cert is not a valid rainbow cycle");
    if (base7->length() != 7)
      throw UsageError("find_c5_through: supplied base cert must have length 7");
    if (!cert_contains(*base7, v))
      throw UsageError("find_c5_through: supplied base cert does not contain the vertex");
  } else if (n >= 7) {
    base7 = find_rainbow_cycle(fam, 7, v);
    if (!base7) miss("no rainbow 7-cycle through the vertex");
  } else {
    miss("n < 7: no base 7-cycle possible");
  }

  if (base7) {
    const RainbowCycleCert base = rotated_to(*base7, v);
    const auto& X = base.vertices;
    const auto& phi = base.colors;
    const std::vector<ColorId> off_cycle = colors_off(base, n);

    // Short chord spanning x_0..x_3: a 5-cycle directly.
    for (ColorId c : color_pool({phi[0], phi[1], phi[2]}, off_cycle)) {
      if (!fam.has_edge(c, X[0], X[3])) continue;
      if ((out.cycle = rebuild_cycle(fam, base, {1, 2}, {0, 1, 2}, {{X[0], X[3], c}}, v)))
        return out;
    }
    miss("direct chord x_0-x_3");

    // Short chord spanning x_4..x_0.
    for (ColorId c : color_pool({phi[4], phi[5], phi[6]}, off_cycle)) {
      if (!fam.has_edge(c, X[4], X[0])) continue;
      if ((out.cycle = rebuild_cycle(fam, base, {5, 6}, {4, 5, 6}, {{X[4], X[0], c}}, v)))
        return out;
    }
    miss("direct chord x_4-x_0");

    // Strict chord-pair reroute at x_0/x_3; the second chord may take the
    // color freed at (x_2, x_3) or any color off the cycle.
    for (ColorId c2 : color_pool({phi[2]}, off_cycle)) {
      RerouteOutcome ro = chord_pair_reroute(fam, base, 0, 3, phi[0], c2);
      if (ro.cycle) {
        out.cycle = std::move(ro.cycle);
        return out;
      }
    }
    miss("chord-pair reroute at x_0/x_3");

    // Wide chord-pair pigeonhole at x_4/x_0 (anchors three apart cyclically).
    for (ColorId c1 : color_pool({phi[4]}, off_cycle)) {
      ChordIndexSets sets = wide_skip_two_sets(fam, base, 4, c1, phi[6],
                                               "wide chord pair at x_4/x_0");
      for (int j : sets.common) {
        if ((out.cycle = harvest_skip_two(fam, base, 4, j, c1, phi[6], v))) return out;
      }
    }
    miss("wide chord pair at x_4/x_0");

    Bitset on(n);
    for (VertexId u : X) on.set(u);
    bool any_detour = false;
    bool done = for_each_detour(fam, base, v, off_cycle, [&](const DetourForm& d) {
      any_detour = true;
      const std::vector<ColorId> d_off = colors_off(d.cert, n);
      // Detour is [x_0, z, x_3, x_4, x_5, x_6]; two single-vertex cuts, then
      // the bridge through an outside vertex w.
      for (ColorId c : color_pool({phi[4], phi[5]}, d_off)) {
        if (!fam.has_edge(c, X[4], X[6])) continue;
        if ((out.cycle = rebuild_cycle(fam, d.cert, {4}, {3, 4}, {{X[4], X[6], c}}, v)))
          return true;
      }
      for (ColorId c : color_pool({phi[6], phi[5]}, d_off)) {
        if (!fam.has_edge(c, X[5], X[0])) continue;
        if ((out.cycle = rebuild_cycle(fam, d.cert, {5}, {4, 5}, {{X[5], X[0], c}}, v)))
          return true;
      }
      if (n > 7) {
        for (ColorId c1 : color_pool({phi[4]}, off_cycle)) {
          for (VertexId w = 0; w < n; ++w) {
            if (on.test(w)) continue;
            if (!fam.has_edge(c1, X[4], w) || !fam.has_edge(phi[6], w, X[0])) continue;
            if (w == d.z) {
              RainbowCycleCert cand;
              cand.vertices = {X[0], X[1], X[2], X[3], d.z};
              cand.colors = {phi[0], phi[1], phi[2], d.out_z, phi[6]};
              if ((out.cycle = verified(fam, std::move(cand), v))) return true;
            } else {
              RainbowCycleCert cand;
              cand.vertices = {X[0], d.z, X[3], X[4], w};
              cand.colors = {d.into_z, d.out_z, phi[3], c1, phi[6]};
              if ((out.cycle = verified(fam, std::move(cand), v))) return true;
            }
          }
        }
      }
      return false;
    });
    if (done) return out;
    miss(any_detour ? "finishing moves on the length-6 detour" : "no length-6 detour cycle");
  }

  if ((out.cycle = find_rainbow_cycle(fam, 5, v))) return out;
  miss("exhaustive search: no rainbow 5-cycle through the vertex");
  return out;
}

ReduceOutcome find_c4_through(const GraphFamily& fam, VertexId v,
                              std::optional<RainbowCycleCert> base5) {
  const int n = fam.vertex_count();
  fam.check_vertex(v);
  if (n < 4) throw UsageError("find_c4_through: needs n >= 4");
  if (!sigma(fam).at_least(n))
    throw UsageError("find_c4_through: sigma < n; the degree-sum hypothesis does not hold");

  ReduceOutcome out;
  auto miss = [&out](const std::string& branch) { out.failed_branches.push_back(branch); };

  if (base5) {
    if (!verify_cycle_cert(fam, *base5).empty())
      throw UsageError("find_c4_through: supplied base cert is not a valid rainbow cycle");
    if (base5->length() != 5)
      throw UsageError("find_c4_through: supplied base cert must have length 5");
    if (!cert_contains(*base5, v))
      throw UsageError("find_c4_through: supplied base cert does not contain the vertex");
  } else if (n >= 5) {
    base5 = find_rainbow_cycle(fam, 5, v);
    if (!base5) miss("no rainbow 5-cycle through the vertex");
  } else {
    miss("n < 5: no base 5-cycle possible");
  }

  if (base5) {
    const RainbowCycleCert base = rotated_to(*base5, v);
    const auto& X = base.vertices;
    const auto& phi = base.colors;
    const std::vector<ColorId> off_cycle = colors_off(base, n);

    struct Cut {
      int drop;        // vertex position removed from the 5-cycle
      int u, w;        // chord endpoints (positions)
      ColorId p0, p1;  // freed colors, probe order
    };
    const Cut cuts[] = {
        {1, 0, 2, phi[0], phi[1]},  // chord (x_0, x_2)
        {4, 0, 3, phi[3], phi[4]},  // chord (x_0, x_3)
        {3, 2, 4, phi[2], phi[3]},  // chord (x_2, x_4)
    };
    for (const Cut& cut : cuts) {
      for (ColorId c : color_pool({cut.p0, cut.p1}, off_cycle)) {
        if (!fam.has_edge(c, X[cut.u], X[cut.w])) continue;
        if ((out.cycle = rebuild_cycle(fam, base, {cut.drop}, {mod(cut.drop - 1, 5), cut.drop},
                                       {{X[cut.u], X[cut.w], c}}, v)))
          return out;
      }
    }
    miss("single-vertex cuts on the 5-cycle");

    // A vertex s off the cycle closing x_2 back to x_0 in two colors the
    // cycle does not use.
    if (n > 5) {
      Bitset on(n);
      for (VertexId u : X) on.set(u);
      for (std::size_t ai = 0; ai < off_cycle.size(); ++ai) {
        for (std::size_t bi = 0; bi < off_cycle.size(); ++bi) {
          if (ai == bi) continue;
          const ColorId c_in = off_cycle[ai], c_out = off_cycle[bi];
          for (VertexId sv = 0; sv < n; ++sv) {
            if (on.test(sv)) continue;
            if (!fam.has_edge(c_in, X[0], sv) || !fam.has_edge(c_out, sv, X[2])) continue;
            RainbowCycleCert cand;
            cand.vertices = {X[0], X[1], X[2], sv};
            cand.colors = {phi[0], phi[1], c_out, c_in};
            if ((out.cycle = verified(fam, std::move(cand), v))) return out;
          }
        }
      }
      miss("outside bridge x_0-s-x_2");
    }
  }

  if ((out.cycle = find_rainbow_cycle(fam, 4, v))) return out;
  miss("exhaustive search: no rainbow 4-cycle through the vertex");
  return out;
}

std::optional<RainbowCycleCert> triangle_via_common_neighborhood(const GraphFamily& fam,
                                                                 VertexId x, VertexId y) {
  fam.check_vertex(x);
  fam.check_vertex(y);
  if (x == y) throw UsageError("triangle_via_common_neighborhood: needs two distinct vertices");
  const int n = fam.color_count();

  const Bitset cxy = color_set(fam, x, y);
  const bool xy_strong = cxy.count() == n;

  for (ColorId b = cxy.next(0); b >= 0; b = cxy.next(b + 1)) {
    for (ColorId a = 0; a < n; ++a) {
      // Paired with a color missing the edge when one exists; for a strong
      // edge any distinct color serves.
      if (xy_strong ? (a == b) : cxy.test(a)) continue;
      for (ColorId cp = 0; cp < n; ++cp) {
        if (cp == a || cp == b) continue;
        Bitset z = fam.neighbors(a, x);
        z &= fam.neighbors(cp, y);
        z.reset(x);
        z.reset(y);
        int zv = z.next(0);
        if (zv >= 0) return RainbowCycleCert{{x, y, zv}, {b, cp, a}};
      }
    }
  }
  return std::nullopt;
}

namespace {

VertexPancyclicResult oracle_pancyclic(const GraphFamily& fam, VertexId v) {
  const int n = fam.vertex_count();
  VertexPancyclicResult r;
  bool missed_required = false;
  for (int len = 3; len <= n; ++len) {
    if (auto cert = find_rainbow_cycle(fam, len, v))
      r.cycles.emplace(len, std::move(*cert));
    else if (len >= 4)
      missed_required = true;
  }
  if (missed_required) {
    ExceptionEvidence ev = detect_bipartite_exception(fam);
    if (!ev.verdict)
      throw TheoremViolation("vertex " + std::to_string(v) +
                             " misses a rainbow cycle length in [4,n] although sigma >= n and the "
                             "family is not the balanced-bipartite exception");
    for (int len = 4; len <= n; len += 2)
      if (!r.cycles.count(len))
        throw TheoremViolation("exception family misses an even rainbow cycle length " +
                               std::to_string(len));
    r.exception = std::move(ev);
  }
  return r;
}

VertexPancyclicResult exception_path(const GraphFamily& fam, VertexId v,
                                     const RainbowCycleCert& ham, ExceptionEvidence ev) {
  const int n = fam.vertex_count();
  VertexPancyclicResult r;
  r.exception = std::move(ev);
  r.cycles.emplace(n, ham);
  RainbowCycleCert cur = ham;
  for (int target = n - 2; target >= 4; target -= 2) {
    std::optional<RainbowCycleCert> next;
    if (cur.length() >= 8) next = reduce_by_two(fam, cur, v).cycle;
    if (!next) next = find_rainbow_cycle(fam, target, v);
    if (!next)
      throw TheoremViolation("exception family misses an even rainbow cycle of length " +
                             std::to_string(target) + " through vertex " + std::to_string(v));
    cur = *next;
    r.cycles.emplace(target, std::move(*next));
  }
  return r;
}

}  // namespace

VertexPancyclicResult constructive_vertex_pancyclic(const GraphFamily& fam, VertexId v,
                                                    bool oracle_only) {
  const int n = fam.vertex_count();
  fam.check_vertex(v);
  if (n < 3) throw UsageError("constructive_vertex_pancyclic: needs n >= 3");
  SigmaValue s = sigma(fam);
  if (!s.at_least(n))
    throw PreconditionError("constructive_vertex_pancyclic: sigma = " + std::to_string(s.value()) +
                            " < n = " + std::to_string(n) +
                            "; the degree-sum hypothesis does not hold");

  // Small families go straight to the oracle; the constructive route needs
  // room for its index sets and detours.
  if (oracle_only || n <= 7) return oracle_pancyclic(fam, v);

  auto ham = find_rainbow_cycle(fam, n, v);
  if (!ham)
    throw TheoremViolation("no rainbow Hamiltonian cycle although sigma >= n (vertex " +
                           std::to_string(v) + ")");

  auto rb1 = reduce_by_one(fam, *ham, v);
  if (std::holds_alternative<ExceptionEvidence>(rb1))
    return exception_path(fam, v, *ham, std::get<ExceptionEvidence>(std::move(rb1)));

  VertexPancyclicResult r;
  r.cycles.emplace(n, *ham);
  r.cycles.emplace(n - 1, std::get<RainbowCycleCert>(std::move(rb1)));

  auto settle = [&](int target, std::optional<RainbowCycleCert> constructive)
      -> const RainbowCycleCert& {
    if (!constructive) constructive = find_rainbow_cycle(fam, target, v);
    if (!constructive) {
      ExceptionEvidence ev = detect_bipartite_exception(fam);
      if (ev.verdict) throw SwitchToException{std::move(ev)};
      throw TheoremViolation("no rainbow cycle of length " + std::to_string(target) +
                             " through vertex " + std::to_string(v) +
                             " although sigma >= n and the family is not the exception");
    }
    return r.cycles.emplace(target, std::move(*constructive)).first->second;
  };

  try {
    for (int start : {n, n - 1}) {
      RainbowCycleCert cur = r.cycles.at(start);
      while (cur.length() >= 8) {
        const int target = cur.length() - 2;
        cur = settle(target, reduce_by_two(fam, cur, v).cycle);
      }
    }
    settle(5, find_c5_through(fam, v, r.cycles.at(7)).cycle);
    settle(4, find_c4_through(fam, v, r.cycles.at(5)).cycle);
  } catch (SwitchToException& sw) {
    return exception_path(fam, v, *ham, std::move(sw.ev));
  }

  // Length 3 is opportunistic: a vertex can miss every rainbow triangle even
  // when sigma >= n, so absence here is an outcome, not an error.
  std::optional<RainbowCycleCert> tri;
  for (VertexId y = 0; y < n && !tri; ++y) {
    if (y == v) continue;
    tri = triangle_via_common_neighborhood(fam, v, y);
  }
  if (!tri) tri = find_rainbow_cycle(fam, 3, v);
  if (tri) r.cycles.emplace(3, std::move(*tri));

  return r;
}

}  // namespace rainbow
