#pragma once

#include <string>
#include <vector>

#include "rainbow/family.hpp"

namespace rainbow {

// Outcome of checking a family against the one escape clause of the
// pancyclicity statements: all n graphs identical and equal to the complete
// balanced bipartite graph.  When the verdict is true the recorded sides
// are the bipartition; otherwise `detail` names the first structural
// discrepancy found.
struct ExceptionEvidence {
  bool verdict = false;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
  std::string detail;
};

// n copies of K_{n/2,n/2} with sides {0..n/2-1} and {n/2..n-1}.
// n must be even and >= 4.
GraphFamily make_balanced_bipartite_family(int n);

// n identical copies of the join of an independent set of size t with the
// disjoint union of one apex vertex and a clique of size m, where
// t = (n+2)/3 and m = (2n-5)/3.  Requires n = 1 (mod 3), n >= 7.
// Layout: apex = 0, independent set = 1..t, clique = t+1..n-1.
// This family has sigma = (4n-4)/3 and its apex lies on no rainbow triangle.
GraphFamily make_joined_split_family(int n);

// Vertex layouts above are fixed so generated certificates are reproducible
// across runs and platforms.

ExceptionEvidence detect_bipartite_exception(const GraphFamily& family);

}  // namespace rainbow
