#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/family.hpp"
#include "rainbow/report.hpp"

namespace rainbow {

enum class GeneratorMode {
  IndependentRandom,   // one random density draw per family, no repair
  RepairToThreshold,   // random start, then witness-guided edge additions
  PerturbExtremal,     // an extremal family plus random edge additions
};

struct GeneratorConfig {
  int n = 0;
  int sigma_threshold = 0;
  std::uint64_t seed = 0;
  int mutation_budget = -1;  // < 0: defaults to n^3
  GeneratorMode mode = GeneratorMode::RepairToThreshold;
};

// Emits a family with sigma >= sigma_threshold, verified post-hoc before
// return, never assumed from the construction.  Deterministic for a fixed
// config.  Throws GenerationFailure when the threshold is not reached within
// the mutation budget.
GraphFamily generate_family_with_sigma_at_least(const GeneratorConfig& config);

// Classical single-graph Ore value of one member graph: min degree sum over
// its own non-adjacent pairs, infinite for a complete graph.  Used by the
// counterexample-search suite, whose hypothesis is per-graph.
struct OreValue {
  bool infinite = false;
  int value = 0;
  bool at_least(int threshold) const { return infinite || value >= threshold; }
};
OreValue single_graph_ore(const GraphFamily& family, ColorId color);

// Like the sigma generator, but drives every member graph's own Ore value to
// the threshold.
GraphFamily generate_family_with_per_graph_ore_at_least(const GeneratorConfig& config);

enum class SuiteName {
  Theorem5,     // sigma >= n  =>  a rainbow Hamiltonian cycle exists
  Theorem7,     // sigma >= n  =>  every vertex on every length in [4,n], or the bipartite exception
  Corollary8,   // sigma >= n  =>  a rainbow triangle exists, or the bipartite exception
  Theorem9,     // sigma >= ceil(4n/3 - 1)  =>  every vertex on every length in [3,n]
  Conjecture10Search,  // per-graph Ore >= n: hunt for a missing rainbow Hamiltonian cycle
};

std::optional<SuiteName> suite_from_name(const std::string& name);
std::string to_string(SuiteName suite);

// The sigma threshold instantiating the suite's hypothesis at a given n.
int suite_sigma_threshold(SuiteName suite, int n);

struct SuiteConfig {
  SuiteName suite = SuiteName::Theorem7;
  int n_min = 4;
  int n_max = 8;
  int samples = 10;
  std::uint64_t seed = 0;
  // <= 0 resolves to the RAINBOW_TIME_BUDGET_SEC environment variable, then
  // to 30 seconds.  Overruns mark the remaining cells skipped and fail the
  // family's report.
  double time_budget_sec = 0.0;
  // When set, the suite runs once on this already-built family instead of
  // generating samples.
  std::optional<std::string> family_path;
};

double resolve_time_budget_sec(double configured);

// One report per family.  Reports stream to `jsonl_out` as they finish (one
// JSON object per line, then a summary line); pass nullptr to skip streaming.
struct SuiteOutcome {
  std::vector<VerificationReport> reports;
  int passed = 0;
  int failed = 0;
  int generation_failures = 0;
  bool pass = false;  // no failed report, and at least one family ran
};

SuiteOutcome run_suite(const SuiteConfig& config, std::ostream* jsonl_out);

// Runs one suite's checks against one family; exposed for tests and for the
// CLI's --family mode.
VerificationReport run_suite_on_family(SuiteName suite, const GraphFamily& family,
                                       int family_index, double time_budget_sec);

}  // namespace rainbow
