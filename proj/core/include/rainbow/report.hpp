#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/certificate.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/family.hpp"

namespace rainbow {

enum class CellStatus { Found, NotFound, Skipped };

// One (vertex, length) query outcome.  vertex == -1 means the query was not
// anchored to a particular vertex.  cert indexes into the report's cert
// table when status == Found.
struct ReportCell {
  VertexId vertex = -1;
  int length = 0;
  CellStatus status = CellStatus::NotFound;
  int cert = -1;
  bool required = true;  // counted toward the verdict
};

// Per-family outcome matrix shared by the oracle's pancyclicity survey and
// the harness suites.  `pass` follows one rule everywhere: every required
// cell holds a verified certificate, or the exception verdict is true and
// the only missing cells are odd lengths.
struct VerificationReport {
  std::string suite;  // "pancyclicity" for plain surveys, else the suite name
  int family_index = 0;
  int n = 0;
  std::uint64_t digest = 0;

  bool sigma_infinite = false;
  int sigma_value = 0;
  std::optional<SigmaWitness> sigma_witness;
  bool hypothesis_met = true;

  int length_lo = 0, length_hi = 0;
  bool per_vertex = false;

  std::vector<ReportCell> cells;
  std::vector<RainbowCycleCert> certs;
  std::optional<ExceptionEvidence> exception;

  bool range_complete = false;  // every cell (required or not) was Found
  bool pass = false;
  std::string note;
  bool generation_failed = false;

  // Timing only; excluded from determinism checks.
  double generation_ms = 0.0;
  double elapsed_ms = 0.0;

  int add_cert(RainbowCycleCert cert) {
    certs.push_back(std::move(cert));
    return static_cast<int>(certs.size()) - 1;
  }
};

}  // namespace rainbow
