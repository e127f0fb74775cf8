#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "rainbow/certificate.hpp"
#include "rainbow/family.hpp"
#include "rainbow/report.hpp"

namespace rainbow {

// Canonical family format, consumed by every module and the CLI:
//   { "n": <int>, "graphs": [ { "edges": [[u,v], ...] }, ... exactly n ] }
// 0-based vertex ids, u < v per edge, no duplicates.  The loader rejects any
// violation with a diagnostic naming the offending field.
GraphFamily family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const GraphFamily& family);
GraphFamily load_family(const std::string& path);
void save_family(const GraphFamily& family, const std::string& path);

// Certificate format: { "vertices": [...], "colors": [...] }, 0-based.
// A cycle carries one color per vertex, a path one fewer.
RainbowCycleCert cycle_cert_from_json(const nlohmann::json& j);
RainbowPathCert path_cert_from_json(const nlohmann::json& j);
nlohmann::json cert_to_json(const RainbowCycleCert& cert);
nlohmann::json cert_to_json(const RainbowPathCert& cert);

// Report lines are emitted as JSON-lines; key order is fixed so a run with
// the same seed is byte-identical apart from the timing fields.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

std::string to_string(CellStatus status);

}  // namespace rainbow
