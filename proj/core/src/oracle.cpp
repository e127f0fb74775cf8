#include "rainbow/oracle.hpp"

#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

// Depth-first extension of a path anchored at `anchor`.  Color availability
// is the binding constraint, so candidate successors are gathered by OR-ing
// the current endpoint's neighbor rows over the colors still unused, then
// masking out used vertices; that prunes most dead branches before the
// per-color loop runs.
//
// Colors whose graphs are identical are interchangeable: if a completion
// exists assigning c2 to the next edge and c1 ~ c2 is also unused, swapping
// the two colors throughout the completion gives one assigning c1.  So at
// each search node only one member per equivalence class is tried; families
// of repeated graphs would otherwise blow the branching factor up by a
// factorial of the multiplicity.
struct Searcher {
  const GraphFamily& family;
  int n;
  int target_len;
  VertexId anchor;
  VertexId floor;  // when >= 0, every non-anchor vertex must exceed it

  std::vector<VertexId> path;
  std::vector<ColorId> colors;
  Bitset used_vertices;
  Bitset used_colors;
  std::vector<ColorId> color_class;  // smallest color with an identical graph
  std::vector<Bitset> tried_at_depth;  // per-depth scratch: recursion must not clobber it

  explicit Searcher(const GraphFamily& fam, int len, VertexId a, VertexId fl)
      : family(fam),
        n(fam.vertex_count()),
        target_len(len),
        anchor(a),
        floor(fl),
        used_vertices(fam.vertex_count()),
        used_colors(fam.color_count()),
        tried_at_depth(len + 1, Bitset(fam.color_count())) {
    path.reserve(len);
    colors.reserve(len);
    path.push_back(anchor);
    used_vertices.set(anchor);

    color_class.assign(n, -1);
    for (ColorId c = 0; c < n; ++c) {
      if (color_class[c] >= 0) continue;
      color_class[c] = c;
      for (ColorId d = c + 1; d < n; ++d) {
        if (color_class[d] >= 0) continue;
        bool same = true;
        for (VertexId v = 0; v < n && same; ++v)
          same = family.neighbors(c, v) == family.neighbors(d, v);
        if (same) color_class[d] = c;
      }
    }
  }

  std::optional<RainbowCycleCert> run() {
    if (extend()) return RainbowCycleCert{path, colors};
    return std::nullopt;
  }

  bool extend() {
    const VertexId cur = path.back();

    if (static_cast<int>(path.size()) == target_len) {
      for (ColorId c = 0; c < n; ++c) {
        if (used_colors.test(c)) continue;
        if (!family.has_edge(c, cur, anchor)) continue;
        colors.push_back(c);
        return true;
      }
      return false;
    }

    Bitset candidates(n);
    for (ColorId c = 0; c < n; ++c)
      if (!used_colors.test(c)) candidates |= family.neighbors(c, cur);
    candidates.subtract(used_vertices);

    const int start = floor >= 0 ? floor + 1 : 0;
    Bitset& tried = tried_at_depth[path.size()];
    for (VertexId w = candidates.next(start); w >= 0; w = candidates.next(w + 1)) {
      tried.clear();
      for (ColorId c = 0; c < n; ++c) {
        if (used_colors.test(c) || !family.has_edge(c, cur, w)) continue;
        if (tried.test(color_class[c])) continue;
        tried.set(color_class[c]);
        path.push_back(w);
        colors.push_back(c);
        used_vertices.set(w);
        used_colors.set(c);
        if (extend()) return true;
        used_colors.reset(c);
        used_vertices.reset(w);
        colors.pop_back();
        path.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<RainbowCycleCert> find_rainbow_cycle(const GraphFamily& family, int length,
                                                   std::optional<VertexId> through) {
  const int n = family.vertex_count();
  if (length < 3 || length > n)
    throw UsageError("cycle length " + std::to_string(length) + " out of range [3," +
                     std::to_string(n) + "]");
  if (through) family.check_vertex(*through);

  if (through) return Searcher(family, length, *through, -1).run();

  // A Hamiltonian cycle visits everything: anchoring at vertex 0 kills the
  // rotational symmetry outright.
  if (length == n) return Searcher(family, length, 0, -1).run();

  // Shorter unanchored cycles: canonicalize by the smallest vertex on the
  // cycle, so each candidate vertex set is searched exactly once.
  for (VertexId a = 0; a + length <= n; ++a) {
    if (auto cert = Searcher(family, length, a, a).run()) return cert;
  }
  return std::nullopt;
}

VerificationReport pancyclicity_report(const GraphFamily& family, int lo, int hi, bool per_vertex) {
  const int n = family.vertex_count();
  if (lo < 3 || lo > hi || hi > n)
    throw UsageError("length range [" + std::to_string(lo) + "," + std::to_string(hi) +
                     "] invalid for n=" + std::to_string(n));

  VerificationReport report;
  report.suite = "pancyclicity";
  report.n = n;
  report.digest = family_digest(family);
  SigmaValue s = sigma(family);
  report.sigma_infinite = s.is_infinite();
  report.sigma_value = s.value();
  report.sigma_witness = s.witness;
  report.length_lo = lo;
  report.length_hi = hi;
  report.per_vertex = per_vertex;

  bool all_found = true;
  bool odd_missing_only = true;
  for (int len = lo; len <= hi; ++len) {
    const int vertex_count = per_vertex ? n : 1;
    for (int k = 0; k < vertex_count; ++k) {
      ReportCell cell;
      cell.length = len;
      cell.vertex = per_vertex ? k : -1;
      auto cert = find_rainbow_cycle(family, len,
                                     per_vertex ? std::optional<VertexId>(k) : std::nullopt);
      if (cert) {
        cell.status = CellStatus::Found;
        cell.cert = report.add_cert(std::move(*cert));
      } else {
        all_found = false;
        if (len % 2 == 0) odd_missing_only = false;
      }
      report.cells.push_back(cell);
    }
  }

  ExceptionEvidence ev = detect_bipartite_exception(family);
  if (ev.verdict) report.exception = ev;

  report.range_complete = all_found;
  report.pass = all_found || (ev.verdict && odd_missing_only);

  std::string scope = per_vertex ? "-rainbow vertex-pancyclic" : " rainbow pancyclic";
  std::string range = "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  report.note = (all_found ? "family is " : "family is not ") +
                (per_vertex ? range + scope : scope.substr(1) + " on " + range);
  if (ev.verdict) report.note += "; balanced-bipartite exception family";
  return report;
}

}  // namespace rainbow
