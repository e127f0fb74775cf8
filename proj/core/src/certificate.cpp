#include "rainbow/certificate.hpp"

#include <algorithm>
#include <map>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

void note(std::vector<Violation>& out, ViolationKind kind, std::string msg) {
  out.push_back(Violation{kind, std::move(msg)});
}

// Range checks plus duplicate reporting shared by both cert kinds.  Returns
// true when every id is in range (edge checks are skipped otherwise for the
// offending positions).
void check_ids(const GraphFamily& family, const std::vector<VertexId>& vertices,
               const std::vector<ColorId>& colors, std::vector<Violation>& out,
               std::vector<bool>& vertex_ok) {
  const int n = family.vertex_count();
  vertex_ok.assign(vertices.size(), true);

  std::map<VertexId, int> first_vertex;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    VertexId v = vertices[k];
    if (v < 0 || v >= n) {
      vertex_ok[k] = false;
      note(out, ViolationKind::VertexOutOfRange,
           "vertex " + std::to_string(v) + " at position " + std::to_string(k) + " out of range");
      continue;
    }
    auto [it, inserted] = first_vertex.emplace(v, static_cast<int>(k));
    if (!inserted)
      note(out, ViolationKind::DuplicateVertex,
           "duplicate vertex " + std::to_string(v) + " at positions " + std::to_string(it->second) +
               "," + std::to_string(k));
  }

  std::map<ColorId, int> first_color;
  for (std::size_t k = 0; k < colors.size(); ++k) {
    ColorId c = colors[k];
    if (c < 0 || c >= family.color_count()) {
      note(out, ViolationKind::ColorOutOfRange,
           "color " + std::to_string(c) + " at position " + std::to_string(k) + " out of range");
      continue;
    }
    auto [it, inserted] = first_color.emplace(c, static_cast<int>(k));
    if (!inserted)
      note(out, ViolationKind::DuplicateColor,
           "duplicate color " + std::to_string(c) + " at positions " + std::to_string(it->second) +
               "," + std::to_string(k));
  }
}

void check_edge(const GraphFamily& family, VertexId u, VertexId v, ColorId c, std::size_t pos,
                std::vector<Violation>& out) {
  if (c < 0 || c >= family.color_count()) return;  // already reported
  if (u == v) return;                              // duplicate-vertex case, already reported
  if (!family.has_edge(c, u, v))
    note(out, ViolationKind::MissingEdge,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") at position " +
             std::to_string(pos) + " not in assigned graph " + std::to_string(c));
}

}  // namespace

std::vector<Violation> verify_cycle_cert(const GraphFamily& family, const RainbowCycleCert& cert) {
  std::vector<Violation> out;
  const std::size_t len = cert.vertices.size();

  if (cert.colors.size() != len)
    note(out, ViolationKind::LengthMismatch,
         "length mismatch: " + std::to_string(len) + " vertices vs " +
             std::to_string(cert.colors.size()) + " colors");
  if (len < 3)
    note(out, ViolationKind::TooShort, "cycle needs at least 3 vertices, got " + std::to_string(len));

  std::vector<bool> vertex_ok;
  check_ids(family, cert.vertices, cert.colors, out, vertex_ok);

  const std::size_t edges = std::min(len, cert.colors.size());
  if (len >= 2) {
    for (std::size_t k = 0; k < edges; ++k) {
      std::size_t k1 = (k + 1) % len;
      if (!vertex_ok[k] || !vertex_ok[k1]) continue;
      check_edge(family, cert.vertices[k], cert.vertices[k1], cert.colors[k], k, out);
    }
  }
  return out;
}

std::vector<Violation> verify_path_cert(const GraphFamily& family, const RainbowPathCert& cert) {
  std::vector<Violation> out;
  const std::size_t len = cert.vertices.size();

  if (cert.colors.size() + 1 != len)
    note(out, ViolationKind::LengthMismatch,
         "length mismatch: " + std::to_string(len) + " vertices need " +
             std::to_string(len == 0 ? 0 : len - 1) + " colors, got " +
             std::to_string(cert.colors.size()));
  if (len < 2)
    note(out, ViolationKind::TooShort, "path needs at least 2 vertices, got " + std::to_string(len));

  std::vector<bool> vertex_ok;
  check_ids(family, cert.vertices, cert.colors, out, vertex_ok);

  const std::size_t edges = std::min(len >= 1 ? len - 1 : 0, cert.colors.size());
  for (std::size_t k = 0; k < edges; ++k) {
    if (!vertex_ok[k] || !vertex_ok[k + 1]) continue;
    check_edge(family, cert.vertices[k], cert.vertices[k + 1], cert.colors[k], k, out);
  }
  return out;
}

RainbowCycleCert rotated(const RainbowCycleCert& cert, int shift) {
  const int len = cert.length();
  if (len == 0) return cert;
  shift = ((shift % len) + len) % len;
  RainbowCycleCert out;
  out.vertices.reserve(len);
  out.colors.reserve(len);
  for (int k = 0; k < len; ++k) {
    out.vertices.push_back(cert.vertices[(k + shift) % len]);
    out.colors.push_back(cert.colors[(k + shift) % len]);
  }
  return out;
}

RainbowCycleCert reversed(const RainbowCycleCert& cert) {
  const int len = cert.length();
  RainbowCycleCert out;
  out.vertices.reserve(len);
  out.colors.reserve(len);
  // New order v0, v_{l-1}, ..., v1; edge k of the reversal is the old edge
  // (l-1-k), so colors realign as c_{l-1}, c_{l-2}, ..., c_0.
  out.vertices.push_back(cert.vertices[0]);
  for (int k = len - 1; k >= 1; --k) out.vertices.push_back(cert.vertices[k]);
  for (int k = len - 1; k >= 0; --k) out.colors.push_back(cert.colors[k]);
  return out;
}

RainbowCycleCert rotated_to(const RainbowCycleCert& cert, VertexId front) {
  for (int k = 0; k < cert.length(); ++k)
    if (cert.vertices[k] == front) return rotated(cert, k);
  throw UsageError("vertex " + std::to_string(front) + " is not on the cycle");
}

bool cert_contains(const RainbowCycleCert& cert, VertexId v) {
  return std::find(cert.vertices.begin(), cert.vertices.end(), v) != cert.vertices.end();
}

}  // namespace rainbow
