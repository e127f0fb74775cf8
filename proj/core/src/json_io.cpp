#include "rainbow/json_io.hpp"

#include <fstream>
#include <set>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw UsageError(where + ": expected an integer, got " + std::string(j.type_name()));
  return j.get<int>();
}

const json& require_field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw UsageError(where + ": missing field \"" + name + "\"");
  return *it;
}

std::vector<int> int_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw UsageError(where + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(require_int(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

GraphFamily family_from_json(const json& j) {
  const int n = require_int(require_field(j, "n", "family"), "family.n");
  if (n < 1) throw UsageError("family.n: must be >= 1, got " + std::to_string(n));

  const json& graphs = require_field(j, "graphs", "family");
  if (!graphs.is_array()) throw UsageError("family.graphs: expected an array");
  if (static_cast<int>(graphs.size()) != n)
    throw UsageError("family.graphs: expected exactly n=" + std::to_string(n) + " entries, got " +
                     std::to_string(graphs.size()));

  GraphFamily fam(n);
  for (int g = 0; g < n; ++g) {
    const std::string where = "family.graphs[" + std::to_string(g) + "]";
    const json& edges = require_field(graphs[g], "edges", where);
    if (!edges.is_array()) throw UsageError(where + ".edges: expected an array");
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string ewhere = where + ".edges[" + std::to_string(k) + "]";
      std::vector<int> pair = int_array(edges[k], ewhere);
      if (pair.size() != 2) throw UsageError(ewhere + ": expected [u,v]");
      int u = pair[0], v = pair[1];
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw UsageError(ewhere + ": vertex out of range [0," + std::to_string(n) + ")");
      if (u >= v) throw UsageError(ewhere + ": edges must satisfy u < v");
      if (!seen.insert({u, v}).second) throw UsageError(ewhere + ": duplicate edge");
      fam.add_edge(g, u, v);
    }
  }
  return fam;
}

json family_to_json(const GraphFamily& family) {
  json graphs = json::array();
  for (ColorId c = 0; c < family.color_count(); ++c) {
    json edges = json::array();
    for (auto [u, v] : family.edge_list(c)) edges.push_back(json::array({u, v}));
    graphs.push_back(json{{"edges", std::move(edges)}});
  }
  return json{{"n", family.vertex_count()}, {"graphs", std::move(graphs)}};
}

GraphFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open family file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw UsageError("family file " + path + ": " + e.what());
  }
  return family_from_json(j);
}

void save_family(const GraphFamily& family, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write family file: " + path);
  out << family_to_json(family).dump(2) << "\n";
}

RainbowCycleCert cycle_cert_from_json(const json& j) {
  RainbowCycleCert cert;
  cert.vertices = int_array(require_field(j, "vertices", "cert"), "cert.vertices");
  cert.colors = int_array(require_field(j, "colors", "cert"), "cert.colors");
  return cert;
}

RainbowPathCert path_cert_from_json(const json& j) {
  RainbowPathCert cert;
  cert.vertices = int_array(require_field(j, "vertices", "cert"), "cert.vertices");
  cert.colors = int_array(require_field(j, "colors", "cert"), "cert.colors");
  return cert;
}

json cert_to_json(const RainbowCycleCert& cert) {
  return json{{"vertices", cert.vertices}, {"colors", cert.colors}};
}

json cert_to_json(const RainbowPathCert& cert) {
  return json{{"vertices", cert.vertices}, {"colors", cert.colors}};
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Found: return "found";
    case CellStatus::NotFound: return "notfound";
    case CellStatus::Skipped: return "skipped";
  }
  return "?";
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["index"] = r.family_index;
  j["n"] = r.n;
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(r.digest));
  j["digest"] = digest;
  if (r.generation_failed) {
    j["generation"] = "failed";
    j["note"] = r.note;
    j["verdict"] = "generation-failure";
    j["timing_ms"] = ordered_json{{"generation", r.generation_ms},
                                  {"checks", 0.0},
                                  {"total", r.generation_ms}};
    return j;
  }

  ordered_json sig;
  sig["infinite"] = r.sigma_infinite;
  if (!r.sigma_infinite) {
    sig["value"] = r.sigma_value;
    if (r.sigma_witness) {
      const SigmaWitness& w = *r.sigma_witness;
      sig["witness"] = ordered_json{{"u", w.u}, {"v", w.v}, {"i", w.i}, {"p", w.p}, {"q", w.q}};
    }
  }
  j["sigma"] = std::move(sig);
  j["hypothesis_met"] = r.hypothesis_met;
  j["lengths"] = ordered_json::array({r.length_lo, r.length_hi});
  j["per_vertex"] = r.per_vertex;

  ordered_json cells = ordered_json::array();
  for (const ReportCell& cell : r.cells) {
    ordered_json c;
    c["vertex"] = cell.vertex;
    c["length"] = cell.length;
    c["status"] = to_string(cell.status);
    if (cell.cert >= 0) c["cert"] = cell.cert;
    if (!cell.required) c["required"] = false;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);

  ordered_json certs = ordered_json::array();
  for (const RainbowCycleCert& cert : r.certs)
    certs.push_back(ordered_json{{"vertices", cert.vertices}, {"colors", cert.colors}});
  j["certs"] = std::move(certs);

  if (r.exception) {
    j["exception"] = ordered_json{{"verdict", r.exception->verdict},
                                  {"side_a", r.exception->side_a},
                                  {"side_b", r.exception->side_b},
                                  {"detail", r.exception->detail}};
  } else {
    j["exception"] = ordered_json{{"verdict", false}};
  }

  j["range_complete"] = r.range_complete;
  j["note"] = r.note;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["timing_ms"] = ordered_json{{"generation", r.generation_ms},
                                {"checks", r.elapsed_ms},
                                {"total", r.generation_ms + r.elapsed_ms}};
  return j;
}

}  // namespace rainbow
