#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rainbow/certificate.hpp"
#include "rainbow/json_io.hpp"
#include "support.hpp"

using namespace rainbow;
using namespace rainbow::testsupport;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::any_of(vs.begin(), vs.end(), [kind](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("valid triangle cert on an all-complete family") {
  GraphFamily fam = complete_family(4);
  RainbowCycleCert cert{{0, 1, 2}, {0, 1, 2}};
  CHECK(verify_cycle_cert(fam, cert).empty());
}

TEST_CASE("violations are accumulated, not short-circuited") {
  GraphFamily fam = complete_family(4);

  auto dup_color = verify_cycle_cert(fam, {{0, 1, 2}, {0, 0, 1}});
  REQUIRE(has_kind(dup_color, ViolationKind::DuplicateColor));
  CHECK(dup_color[0].message == "duplicate color 0 at positions 0,1");

  auto dup_vertex = verify_cycle_cert(fam, {{0, 1, 0}, {0, 1, 2}});
  CHECK(has_kind(dup_vertex, ViolationKind::DuplicateVertex));

  // Several independent defects in one cert: all of them reported.
  auto many = verify_cycle_cert(fam, {{0, 1, 1}, {2, 2, 9}});
  CHECK(has_kind(many, ViolationKind::DuplicateVertex));
  CHECK(has_kind(many, ViolationKind::DuplicateColor));
  CHECK(has_kind(many, ViolationKind::ColorOutOfRange));
  CHECK(many.size() >= 3);
}

TEST_CASE("missing edge is reported with its position") {
  GraphFamily fam(4);
  fam.add_edge(0, 0, 1);
  fam.add_edge(1, 1, 2);
  // Edge (2,0) absent from graph 2.
  auto vs = verify_cycle_cert(fam, {{0, 1, 2}, {0, 1, 2}});
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == ViolationKind::MissingEdge);
  CHECK(vs[0].message == "edge (2,0) at position 2 not in assigned graph 2");
}

TEST_CASE("path certs") {
  GraphFamily fam(4);
  fam.add_edge(3, 1, 2);

  CHECK(verify_path_cert(fam, {{1, 2}, {3}}).empty());
  CHECK(has_kind(verify_path_cert(fam, {{1, 2, 1}, {3, 3}}), ViolationKind::DuplicateVertex));
  CHECK(has_kind(verify_path_cert(fam, {{1, 2}, {3, 0}}), ViolationKind::LengthMismatch));
}

TEST_CASE("cycle cert length mismatch and short cycles") {
  GraphFamily fam = complete_family(4);
  CHECK(has_kind(verify_cycle_cert(fam, {{0, 1, 2}, {0, 1}}), ViolationKind::LengthMismatch));
  CHECK(has_kind(verify_cycle_cert(fam, {{0, 1}, {0, 1}}), ViolationKind::TooShort));
}

TEST_CASE("rotation and reversal preserve validity") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 5 + rng.below(3);
    GraphFamily fam = complete_family(n);
    // Random rainbow cycle on a complete family: any distinct vertices plus
    // any distinct colors.
    int len = 3 + rng.below(n - 2);
    std::vector<VertexId> vs(n);
    std::vector<ColorId> cs(n);
    for (int i = 0; i < n; ++i) vs[i] = cs[i] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(vs[i], vs[rng.below(i + 1)]);
      std::swap(cs[i], cs[rng.below(i + 1)]);
    }
    RainbowCycleCert cert{{vs.begin(), vs.begin() + len}, {cs.begin(), cs.begin() + len}};
    REQUIRE(verify_cycle_cert(fam, cert).empty());

    CHECK(verify_cycle_cert(fam, rotated(cert, rng.below(len))).empty());
    CHECK(verify_cycle_cert(fam, reversed(cert)).empty());
    CHECK(verify_cycle_cert(fam, reversed(rotated(cert, 1))).empty());
    CHECK(rotated_to(cert, cert.vertices[2]).vertices[0] == cert.vertices[2]);
  }
}

TEST_CASE("random single mutations flip acceptance") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6;
    GraphFamily fam = complete_family(n);
    RainbowCycleCert cert{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}};
    REQUIRE(verify_cycle_cert(fam, cert).empty());

    switch (rng.below(3)) {
      case 0: {  // duplicate a color
        int k = rng.below(5);
        cert.colors[k] = cert.colors[(k + 1 + rng.below(4)) % 5];
        break;
      }
      case 1: {  // duplicate a vertex
        int k = rng.below(5);
        cert.vertices[k] = cert.vertices[(k + 1 + rng.below(4)) % 5];
        break;
      }
      default: {  // remove a used edge from its assigned graph
        int k = rng.below(5);
        GraphFamily broken(n);
        for (ColorId c = 0; c < n; ++c)
          for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) {
              VertexId a = cert.vertices[k], b = cert.vertices[(k + 1) % 5];
              if (c == cert.colors[k] && u == std::min(a, b) && v == std::max(a, b)) continue;
              broken.add_edge(c, u, v);
            }
        CHECK_FALSE(verify_cycle_cert(broken, cert).empty());
        continue;
      }
    }
    CHECK_FALSE(verify_cycle_cert(fam, cert).empty());
  }
}

TEST_CASE("certificate JSON round trip") {
  RainbowCycleCert cert{{0, 2, 4, 1}, {3, 0, 2, 1}};
  CHECK(cycle_cert_from_json(cert_to_json(cert)) == cert);
  RainbowPathCert path{{5, 0, 3}, {2, 4}};
  CHECK(path_cert_from_json(cert_to_json(path)) == path);
}
