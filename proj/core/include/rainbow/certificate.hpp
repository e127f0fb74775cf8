#pragma once

#include <string>
#include <vector>

#include "rainbow/family.hpp"

namespace rainbow {

// A cycle together with an explicit injective color assignment: colors[k]
// is assigned to the edge (vertices[k], vertices[(k+1) % length]).  The
// assignment is part of the certificate so the rainbow property can be
// checked without re-searching.
struct RainbowCycleCert {
  std::vector<VertexId> vertices;
  std::vector<ColorId> colors;

  int length() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const RainbowCycleCert&, const RainbowCycleCert&) = default;
};

// Same, without the wraparound edge: colors[k] on (vertices[k], vertices[k+1]).
struct RainbowPathCert {
  std::vector<VertexId> vertices;
  std::vector<ColorId> colors;

  int length() const { return static_cast<int>(colors.size()); }

  friend bool operator==(const RainbowPathCert&, const RainbowPathCert&) = default;
};

enum class ViolationKind {
  LengthMismatch,
  TooShort,
  VertexOutOfRange,
  ColorOutOfRange,
  DuplicateVertex,
  DuplicateColor,
  MissingEdge,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Verification accumulates every defect instead of stopping at the first;
// adversarial certificates are reported in full.  An empty list means the
// certificate is valid against the family.
std::vector<Violation> verify_cycle_cert(const GraphFamily& family, const RainbowCycleCert& cert);
std::vector<Violation> verify_path_cert(const GraphFamily& family, const RainbowPathCert& cert);

// Cyclic shift by `shift` positions (colors move with their edges).
RainbowCycleCert rotated(const RainbowCycleCert& cert, int shift);

// Same cycle traversed in the opposite direction, colors re-aligned to edges.
RainbowCycleCert reversed(const RainbowCycleCert& cert);

// Shift so that `front` sits at position 0; UsageError if absent.
RainbowCycleCert rotated_to(const RainbowCycleCert& cert, VertexId front);

bool cert_contains(const RainbowCycleCert& cert, VertexId v);

}  // namespace rainbow
