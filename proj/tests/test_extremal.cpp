#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rotation.hpp"
#include "support.hpp"

using namespace rainbow;
using namespace rainbow::testsupport;

TEST_CASE("balanced bipartite generator") {
  for (int n : {4, 6, 8}) {
    GraphFamily fam = make_balanced_bipartite_family(n);
    CHECK(sigma(fam).value() == n);
    for (ColorId c = 0; c < n; ++c)
      CHECK(static_cast<int>(fam.edge_list(c).size()) == (n / 2) * (n / 2));
  }
  CHECK_THROWS_AS(make_balanced_bipartite_family(5), UsageError);
  CHECK_THROWS_AS(make_balanced_bipartite_family(2), UsageError);
}

TEST_CASE("bipartite family parity: even lengths through every vertex, no odd cycles") {
  GraphFamily fam = make_balanced_bipartite_family(6);
  for (int len = 4; len <= 6; ++len) {
    for (VertexId v = 0; v < 6; ++v) {
      auto cert = find_rainbow_cycle(fam, len, v);
      if (len % 2 == 0) {
        REQUIRE(cert.has_value());
        CHECK(verify_cycle_cert(fam, *cert).empty());
      } else {
        CHECK_FALSE(cert.has_value());
      }
    }
  }
}

TEST_CASE("joined split generator") {
  GraphFamily f7 = make_joined_split_family(7);
  CHECK(sigma(f7).value() == 8);  // (4n-4)/3
  CHECK(degree(f7, 0, 0) == 3);   // apex sees exactly the independent set

  GraphFamily f10 = make_joined_split_family(10);
  CHECK(sigma(f10).value() == 12);

  CHECK_THROWS_AS(make_joined_split_family(9), UsageError);
  CHECK_THROWS_AS(make_joined_split_family(4), UsageError);
}

TEST_CASE("split family: apex on no rainbow triangle, all other vertices on one") {
  GraphFamily fam = make_joined_split_family(7);
  CHECK_FALSE(find_rainbow_cycle(fam, 3, 0).has_value());
  for (VertexId v = 1; v < 7; ++v) {
    auto cert = find_rainbow_cycle(fam, 3, v);
    REQUIRE(cert.has_value());
    CHECK(verify_cycle_cert(fam, *cert).empty());
  }
}

TEST_CASE("exception detection") {
  for (int n : {4, 6, 8}) {
    ExceptionEvidence ev = detect_bipartite_exception(make_balanced_bipartite_family(n));
    CHECK(ev.verdict);
    REQUIRE(static_cast<int>(ev.side_a.size()) == n / 2);
    CHECK(ev.side_a[0] == 0);
  }

  // One extra edge inside a side of one member graph breaks the verdict.
  GraphFamily tweaked = make_balanced_bipartite_family(6);
  tweaked.add_edge(0, 0, 1);
  ExceptionEvidence ev = detect_bipartite_exception(tweaked);
  CHECK_FALSE(ev.verdict);
  CHECK_FALSE(ev.detail.empty());

  CHECK_FALSE(detect_bipartite_exception(make_joined_split_family(7)).verdict);
  CHECK_FALSE(detect_bipartite_exception(complete_family(6)).verdict);
  CHECK_FALSE(detect_bipartite_exception(complete_family(5)).verdict);

  // Identical bipartite-complete graphs on an unbalanced split.
  GraphFamily unbalanced(6);
  for (ColorId c = 0; c < 6; ++c)
    for (VertexId u = 0; u < 2; ++u)
      for (VertexId v = 2; v < 6; ++v) unbalanced.add_edge(c, u, v);
  CHECK_FALSE(detect_bipartite_exception(unbalanced).verdict);
}

TEST_CASE("exception family neighborhoods alternate along any rainbow Hamiltonian cycle") {
  // Structural fingerprint of the exception: walk a rainbow Hamiltonian
  // cycle; every vertex's neighborhood in every color is exactly the
  // opposite parity class of cycle positions.
  GraphFamily fam = make_balanced_bipartite_family(8);
  auto ham = find_rainbow_cycle(fam, 8);
  REQUIRE(ham.has_value());
  const auto& X = ham->vertices;
  for (ColorId c = 0; c < 8; ++c) {
    for (int i = 0; i < 8; ++i) {
      Bitset expected(8);
      for (int j = 0; j < 8; ++j)
        if ((j - i) % 2 != 0) expected.set(X[j]);
      CHECK(fam.neighbors(c, X[i]) == expected);
    }
  }
}
