// Command-line front end: searching, certificate verification, the
// constructive pancyclicity pipeline, extremal generators, the sigma-driven
// family generator, and the verification suites.
//
// Exit codes: 0 success/pass, 1 negative result or suite failure, 2 usage
// error, 3 generation failure.
//
// JSON input and output use 0-based vertex and color ids throughout; the
// human-readable summary lines on stderr print vertices 1-based, matching
// the usual convention in the literature.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rotation.hpp"

namespace {

using namespace rainbow;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGeneration = 3;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  return j;
}

int cmd_find(const std::string& family_path, int length, int through_raw) {
  GraphFamily fam = load_family(family_path);
  std::optional<VertexId> through;
  if (through_raw >= 0) through = through_raw;
  auto cert = find_rainbow_cycle(fam, length, through);
  if (!cert) {
    std::cout << "NOT FOUND\n";
    return kExitFail;
  }
  std::cout << cert_to_json(*cert).dump() << "\n";
  std::cerr << "rainbow cycle of length " << length << " found";
  if (through) std::cerr << " through vertex " << (*through + 1) << " (1-based)";
  std::cerr << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& family_path, const std::string& cert_path, std::string kind) {
  GraphFamily fam = load_family(family_path);
  json j = load_json_file(cert_path);

  if (kind == "auto") {
    // A cycle carries one color per vertex, a path one fewer.
    std::size_t nv = j.value("vertices", json::array()).size();
    std::size_t nc = j.value("colors", json::array()).size();
    kind = (nc + 1 == nv) ? "path" : "cycle";
  }

  std::vector<Violation> violations;
  if (kind == "cycle")
    violations = verify_cycle_cert(fam, cycle_cert_from_json(j));
  else if (kind == "path")
    violations = verify_path_cert(fam, path_cert_from_json(j));
  else
    throw UsageError("verify: kind must be cycle, path, or auto");

  if (violations.empty()) {
    std::cout << "OK\n";
    return kExitPass;
  }
  for (const Violation& v : violations) std::cout << "violation: " << v.message << "\n";
  return kExitFail;
}

int cmd_pancyclic(const std::string& family_path, int vertex, bool oracle_only) {
  GraphFamily fam = load_family(family_path);
  VertexPancyclicResult result = constructive_vertex_pancyclic(fam, vertex, oracle_only);

  ordered_json out;
  out["vertex"] = vertex;
  ordered_json cycles = ordered_json::object();
  for (const auto& [len, cert] : result.cycles)
    cycles[std::to_string(len)] = cert_to_json(cert);
  out["cycles"] = std::move(cycles);
  if (result.exception) {
    out["exception"] = ordered_json{{"verdict", true},
                                    {"side_a", result.exception->side_a},
                                    {"side_b", result.exception->side_b},
                                    {"detail", result.exception->detail}};
  } else {
    out["exception"] = ordered_json{{"verdict", false}};
  }
  std::cout << out.dump(2) << "\n";

  std::cerr << "vertex " << (vertex + 1) << " (1-based) lies on rainbow cycles of lengths:";
  for (const auto& [len, cert] : result.cycles) std::cerr << " " << len;
  if (result.exception) std::cerr << "  [balanced-bipartite exception family]";
  std::cerr << "\n";
  return kExitPass;
}

int cmd_extremal(const std::string& kind, int n, const std::string& out_path) {
  GraphFamily fam = [&]() {
    if (kind == "bipartite") return make_balanced_bipartite_family(n);
    if (kind == "split") return make_joined_split_family(n);
    throw UsageError("extremal: kind must be bipartite or split");
  }();
  save_family(fam, out_path);
  SigmaValue s = sigma(fam);
  std::cerr << "wrote " << out_path << " (n=" << n << ", sigma=" << s.value() << ")\n";
  return kExitPass;
}

int cmd_generate(int n, int sigma_min, std::uint64_t seed, int budget, const std::string& mode_name,
                 const std::string& out_path) {
  GeneratorConfig config;
  config.n = n;
  config.sigma_threshold = sigma_min;
  config.seed = seed;
  config.mutation_budget = budget;
  if (mode_name == "independent")
    config.mode = GeneratorMode::IndependentRandom;
  else if (mode_name == "repair")
    config.mode = GeneratorMode::RepairToThreshold;
  else if (mode_name == "perturb-extremal")
    config.mode = GeneratorMode::PerturbExtremal;
  else
    throw UsageError("generate: mode must be independent, repair, or perturb-extremal");

  GraphFamily fam = generate_family_with_sigma_at_least(config);
  save_family(fam, out_path);
  SigmaValue s = sigma(fam);
  std::cerr << "wrote " << out_path << " (n=" << n << ", sigma="
            << (s.is_infinite() ? std::string("infinite") : std::to_string(s.value())) << ")\n";
  return kExitPass;
}

int cmd_suite(const std::string& name, int n_min, int n_max, int samples, std::uint64_t seed,
              const std::string& out_path, const std::string& family_path, double time_budget) {
  auto suite = suite_from_name(name);
  if (!suite)
    throw UsageError("suite: unknown name \"" + name +
                     "\" (theorem5, theorem7, corollary8, theorem9, conjecture10-search)");

  SuiteConfig config;
  config.suite = *suite;
  config.n_min = n_min;
  config.n_max = n_max;
  config.samples = samples;
  config.seed = seed;
  config.time_budget_sec = time_budget;
  if (!family_path.empty()) config.family_path = family_path;

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) throw UsageError("cannot write report file: " + out_path);
    out = &file_out;
  }

  SuiteOutcome outcome = run_suite(config, out);
  std::cerr << "suite " << name << ": " << outcome.passed << " passed, " << outcome.failed
            << " failed, " << outcome.generation_failures << " generation failures\n";
  if (outcome.failed > 0) return kExitFail;
  if (outcome.generation_failures > 0) return kExitGeneration;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow cycles in graph families: search, certify, verify"};
  app.require_subcommand(1);

  // find
  std::string find_family;
  int find_length = 0;
  int find_through = -1;
  auto* find = app.add_subcommand("find", "search for a rainbow cycle");
  find->add_option("--family", find_family, "family JSON file")->required();
  find->add_option("--length", find_length, "cycle length")->required();
  find->add_option("--through", find_through, "vertex the cycle must contain (0-based)");

  // verify
  std::string verify_family, verify_cert, verify_kind = "auto";
  auto* verify = app.add_subcommand("verify", "verify a certificate against a family");
  verify->add_option("--family", verify_family, "family JSON file")->required();
  verify->add_option("--cert", verify_cert, "certificate JSON file")->required();
  verify->add_option("--kind", verify_kind, "cycle | path | auto (default auto)");

  // pancyclic
  std::string pan_family;
  int pan_vertex = 0;
  bool pan_constructive = false, pan_oracle_only = false;
  auto* pan = app.add_subcommand("pancyclic", "certify every cycle length through a vertex");
  pan->add_option("--family", pan_family, "family JSON file")->required();
  pan->add_option("--vertex", pan_vertex, "anchor vertex (0-based)")->required();
  pan->add_flag("--constructive", pan_constructive, "constructive pipeline (default)");
  pan->add_flag("--oracle-only", pan_oracle_only, "answer every length with the search oracle");

  // extremal
  std::string ext_kind, ext_out;
  int ext_n = 0;
  auto* ext = app.add_subcommand("extremal", "write an extremal family");
  ext->add_option("--kind", ext_kind, "bipartite | split")->required();
  ext->add_option("--n", ext_n, "vertex count")->required();
  ext->add_option("--out", ext_out, "output family JSON file")->required();

  // generate
  int gen_n = 0, gen_sigma = 0, gen_budget = -1;
  std::uint64_t gen_seed = 0;
  std::string gen_mode = "repair", gen_out;
  auto* gen = app.add_subcommand("generate", "generate a family with sigma above a threshold");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--sigma-min", gen_sigma, "sigma threshold")->required();
  gen->add_option("--seed", gen_seed, "64-bit seed")->required();
  gen->add_option("--out", gen_out, "output family JSON file")->required();
  gen->add_option("--mode", gen_mode, "independent | repair | perturb-extremal (default repair)");
  gen->add_option("--budget", gen_budget, "mutation budget (default n^3)");

  // suite
  std::string suite_name, suite_out, suite_family;
  int suite_nmin = 4, suite_nmax = 8, suite_samples = 10;
  std::uint64_t suite_seed = 0;
  double suite_budget = 0;
  auto* suite = app.add_subcommand("suite", "run a verification suite, one report per family");
  suite->add_option("--name", suite_name,
                    "theorem5 | theorem7 | corollary8 | theorem9 | conjecture10-search")
      ->required();
  suite->add_option("--n-min", suite_nmin, "smallest n (default 4)");
  suite->add_option("--n-max", suite_nmax, "largest n (default 8)");
  suite->add_option("--samples", suite_samples, "families to generate (default 10)");
  suite->add_option("--seed", suite_seed, "64-bit master seed");
  suite->add_option("--out", suite_out, "JSON-lines report file (default stdout)");
  suite->add_option("--family", suite_family, "run on this family file instead of generating");
  suite->add_option("--time-budget", suite_budget,
                    "seconds per family (default RAINBOW_TIME_BUDGET_SEC or 30)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(find)) return cmd_find(find_family, find_length, find_through);
    if (app.got_subcommand(verify)) return cmd_verify(verify_family, verify_cert, verify_kind);
    if (app.got_subcommand(pan)) {
      if (pan_constructive && pan_oracle_only)
        throw UsageError("pancyclic: --constructive and --oracle-only are mutually exclusive");
      return cmd_pancyclic(pan_family, pan_vertex, pan_oracle_only);
    }
    if (app.got_subcommand(ext)) return cmd_extremal(ext_kind, ext_n, ext_out);
    if (app.got_subcommand(gen))
      return cmd_generate(gen_n, gen_sigma, gen_seed, gen_budget, gen_mode, gen_out);
    if (app.got_subcommand(suite))
      return cmd_suite(suite_name, suite_nmin, suite_nmax, suite_samples, suite_seed, suite_out,
                       suite_family, suite_budget);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GenerationFailure& e) {
    std::cerr << "generation failure: " << e.what() << "\n";
    return kExitGeneration;
  } catch (const TheoremViolation& e) {
    std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
