#include "rainbow/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>

#include "rainbow/errors.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/rotation.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

GraphFamily random_family(int n, Rng& rng) {
  GraphFamily fam(n);
  for (ColorId c = 0; c < n; ++c) {
    double p = 0.25 + 0.5 * rng.unit();
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.chance(p)) fam.add_edge(c, u, v);
  }
  return fam;
}

// One witness-guided mutation: add the witness's missing edge, or add a
// random edge at one of the two minimum-degree endpoints in its color.
void repair_step(GraphFamily& fam, const SigmaWitness& w, Rng& rng) {
  const int n = fam.vertex_count();
  auto boost = [&](VertexId x, ColorId c) {
    std::vector<VertexId> candidates;
    for (VertexId y = 0; y < n; ++y)
      if (y != x && !fam.has_edge(c, x, y)) candidates.push_back(y);
    if (candidates.empty()) return false;
    fam.add_edge(c, x, candidates[rng.below(static_cast<int>(candidates.size()))]);
    return true;
  };
  switch (rng.below(3)) {
    case 1:
      if (boost(w.u, w.p)) return;
      break;
    case 2:
      if (boost(w.v, w.q)) return;
      break;
    default:
      break;
  }
  if (!fam.has_edge(w.i, w.u, w.v)) fam.add_edge(w.i, w.u, w.v);
}

int default_budget(const GeneratorConfig& config) {
  if (config.mutation_budget >= 0) return config.mutation_budget;
  return config.n * config.n * config.n;
}

}  // namespace

GraphFamily generate_family_with_sigma_at_least(const GeneratorConfig& config) {
  if (config.n < 1) throw UsageError("generator: n must be >= 1");
  if (config.sigma_threshold < 0) throw UsageError("generator: sigma threshold must be >= 0");
  Rng rng(config.seed);
  const int budget = default_budget(config);

  auto finish = [&](GraphFamily fam) {
    SigmaValue s = sigma(fam);  // the contract is verified, never assumed
    if (!s.at_least(config.sigma_threshold))
      throw GenerationFailure("generator: reached sigma = " + std::to_string(s.value()) +
                              " < threshold " + std::to_string(config.sigma_threshold) +
                              " within budget " + std::to_string(budget));
    return fam;
  };

  switch (config.mode) {
    case GeneratorMode::IndependentRandom: {
      for (int attempt = 0; attempt < 32; ++attempt) {
        GraphFamily fam = random_family(config.n, rng);
        if (sigma(fam).at_least(config.sigma_threshold)) return fam;
      }
      throw GenerationFailure("generator: 32 independent draws all fell below threshold " +
                              std::to_string(config.sigma_threshold));
    }
    case GeneratorMode::RepairToThreshold: {
      GraphFamily fam = random_family(config.n, rng);
      for (int step = 0; step < budget; ++step) {
        SigmaValue s = sigma(fam);
        if (s.at_least(config.sigma_threshold)) return fam;
        repair_step(fam, *s.witness, rng);
      }
      return finish(std::move(fam));
    }
    case GeneratorMode::PerturbExtremal: {
      GraphFamily fam = [&]() {
        if (config.n >= 4 && config.n % 2 == 0) return make_balanced_bipartite_family(config.n);
        if (config.n >= 7 && config.n % 3 == 1) return make_joined_split_family(config.n);
        throw GenerationFailure("generator: no extremal family exists for n = " +
                                std::to_string(config.n));
      }();
      const int additions = budget > 0 ? rng.below(budget + 1) : 0;
      for (int k = 0; k < additions; ++k) {
        for (int attempt = 0; attempt < 64; ++attempt) {
          ColorId c = rng.below(config.n);
          VertexId u = rng.below(config.n);
          VertexId v = rng.below(config.n);
          if (u == v || fam.has_edge(c, u, v)) continue;
          fam.add_edge(c, u, v);
          break;
        }
      }
      return finish(std::move(fam));
    }
  }
  throw UsageError("generator: unknown mode");
}

OreValue single_graph_ore(const GraphFamily& family, ColorId color) {
  const int n = family.vertex_count();
  OreValue best{true, 0};
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (family.has_edge(color, u, v)) continue;
      int value = degree(family, color, u) + degree(family, color, v);
      if (best.infinite || value < best.value) best = OreValue{false, value};
    }
  }
  return best;
}

GraphFamily generate_family_with_per_graph_ore_at_least(const GeneratorConfig& config) {
  if (config.n < 1) throw UsageError("generator: n must be >= 1");
  Rng rng(config.seed);
  const int budget = default_budget(config);
  GraphFamily fam = random_family(config.n, rng);
  const int n = config.n;

  for (int step = 0; step < budget; ++step) {
    bool all_ok = true;
    for (ColorId c = 0; c < n && all_ok; ++c) {
      if (single_graph_ore(fam, c).at_least(config.sigma_threshold)) continue;
      all_ok = false;
      // Locate the minimizing non-adjacent pair in this graph and repair it.
      VertexId bu = -1, bv = -1;
      int bval = 0;
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
          if (fam.has_edge(c, u, v)) continue;
          int value = degree(fam, c, u) + degree(fam, c, v);
          if (bu < 0 || value < bval) {
            bu = u;
            bv = v;
            bval = value;
          }
        }
      if (rng.below(2) == 0) {
        fam.add_edge(c, bu, bv);
      } else {
        VertexId x = degree(fam, c, bu) <= degree(fam, c, bv) ? bu : bv;
        std::vector<VertexId> candidates;
        for (VertexId y = 0; y < n; ++y)
          if (y != x && !fam.has_edge(c, x, y)) candidates.push_back(y);
        if (candidates.empty())
          fam.add_edge(c, bu, bv);
        else
          fam.add_edge(c, x, candidates[rng.below(static_cast<int>(candidates.size()))]);
      }
    }
    if (all_ok) return fam;
  }
  for (ColorId c = 0; c < n; ++c)
    if (!single_graph_ore(fam, c).at_least(config.sigma_threshold))
      throw GenerationFailure("generator: graph " + std::to_string(c) +
                              " stuck below per-graph Ore threshold " +
                              std::to_string(config.sigma_threshold));
  return fam;
}

std::optional<SuiteName> suite_from_name(const std::string& name) {
  if (name == "theorem5") return SuiteName::Theorem5;
  if (name == "theorem7") return SuiteName::Theorem7;
  if (name == "corollary8") return SuiteName::Corollary8;
  if (name == "theorem9") return SuiteName::Theorem9;
  if (name == "conjecture10-search") return SuiteName::Conjecture10Search;
  return std::nullopt;
}

std::string to_string(SuiteName suite) {
  switch (suite) {
    case SuiteName::Theorem5: return "theorem5";
    case SuiteName::Theorem7: return "theorem7";
    case SuiteName::Corollary8: return "corollary8";
    case SuiteName::Theorem9: return "theorem9";
    case SuiteName::Conjecture10Search: return "conjecture10-search";
  }
  return "?";
}

int suite_sigma_threshold(SuiteName suite, int n) {
  if (suite == SuiteName::Theorem9) return (4 * n - 1) / 3;  // ceil(4n/3 - 1)
  return n;
}

double resolve_time_budget_sec(double configured) {
  if (configured > 0) return configured;
  if (const char* env = std::getenv("RAINBOW_TIME_BUDGET_SEC")) {
    char* end = nullptr;
    double value = std::strtod(env, &end);
    if (end != env && value > 0) return value;
  }
  return 30.0;
}

namespace {

bool recheck_cert(const GraphFamily& fam, const RainbowCycleCert& cert) {
  return verify_cycle_cert(fam, cert).empty();
}

// Fills the per-vertex, per-length cells of a pancyclicity-style suite.
// `lo` is 3 for the full vertex-pancyclicity suite and 4 for the one with
// the bipartite escape clause.  Returns false when the wall-clock budget ran
// out (remaining cells are marked skipped).
bool fill_vertex_cells(const GraphFamily& fam, VerificationReport& report, int lo,
                       bool allow_exception, Clock::time_point deadline) {
  const int n = fam.vertex_count();
  bool in_budget = true;

  for (VertexId v = 0; v < n; ++v) {
    if (in_budget && Clock::now() > deadline) in_budget = false;

    if (!in_budget) {
      for (int len = lo; len <= n; ++len)
        report.cells.push_back({v, len, CellStatus::Skipped, -1, true});
      continue;
    }

    VertexPancyclicResult result;
    if (report.hypothesis_met) {
      result = constructive_vertex_pancyclic(fam, v);
    } else {
      // Outside the hypothesis nothing is promised; survey with the oracle
      // so the report still states what holds.
      for (int len = 3; len <= n; ++len)
        if (auto cert = find_rainbow_cycle(fam, len, v)) result.cycles.emplace(len, *cert);
      ExceptionEvidence ev = detect_bipartite_exception(fam);
      if (ev.verdict) result.exception = ev;
    }

    if (result.exception && !report.exception) report.exception = result.exception;

    if (lo == 3 && !result.cycles.count(3)) {
      // The constructive driver only ropes in a triangle opportunistically;
      // retry the dedicated scan before concluding the cell is empty.
      std::optional<RainbowCycleCert> tri;
      for (VertexId y = 0; y < n && !tri; ++y) {
        if (y == v) continue;
        tri = triangle_via_common_neighborhood(fam, v, y);
      }
      if (tri) result.cycles.emplace(3, std::move(*tri));
    }

    const bool exceptional = allow_exception && result.exception.has_value();
    for (int len = lo; len <= n; ++len) {
      ReportCell cell;
      cell.vertex = v;
      cell.length = len;
      cell.required = !(exceptional && len % 2 == 1);
      auto it = result.cycles.find(len);
      if (it != result.cycles.end() && recheck_cert(fam, it->second)) {
        cell.status = CellStatus::Found;
        cell.cert = report.add_cert(it->second);
      }
      report.cells.push_back(cell);
    }
  }
  return in_budget;
}

}  // namespace

VerificationReport run_suite_on_family(SuiteName suite, const GraphFamily& fam, int family_index,
                                       double time_budget_sec) {
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(resolve_time_budget_sec(time_budget_sec)));
  const int n = fam.vertex_count();

  VerificationReport report;
  report.suite = to_string(suite);
  report.family_index = family_index;
  report.n = n;
  report.digest = family_digest(fam);

  SigmaValue s = sigma(fam);
  report.sigma_infinite = s.is_infinite();
  report.sigma_value = s.value();
  report.sigma_witness = s.witness;

  const int threshold = suite_sigma_threshold(suite, n);
  if (suite == SuiteName::Conjecture10Search) {
    report.hypothesis_met = true;
    for (ColorId c = 0; c < n; ++c)
      if (!single_graph_ore(fam, c).at_least(n)) report.hypothesis_met = false;
  } else {
    report.hypothesis_met = s.at_least(threshold);
  }

  bool in_budget = true;
  bool conclusion = false;

  switch (suite) {
    case SuiteName::Theorem5:
    case SuiteName::Conjecture10Search: {
      report.length_lo = report.length_hi = n;
      ReportCell cell;
      cell.length = n;
      if (auto cert = find_rainbow_cycle(fam, n); cert && recheck_cert(fam, *cert)) {
        cell.status = CellStatus::Found;
        cell.cert = report.add_cert(std::move(*cert));
        conclusion = true;
      }
      report.cells.push_back(cell);
      report.note = conclusion ? "rainbow Hamiltonian cycle found" : "no rainbow Hamiltonian cycle";
      if (suite == SuiteName::Conjecture10Search && report.hypothesis_met && !conclusion)
        report.note = "COUNTEREXAMPLE CANDIDATE: per-graph Ore >= n but no rainbow Hamiltonian cycle";
      break;
    }

    case SuiteName::Theorem7: {
      report.length_lo = 4;
      report.length_hi = n;
      report.per_vertex = true;
      in_budget = fill_vertex_cells(fam, report, 4, /*allow_exception=*/true, deadline);
      conclusion = true;
      for (const ReportCell& cell : report.cells)
        if (cell.required && cell.status != CellStatus::Found) conclusion = false;
      report.note = report.exception
                        ? "bipartite exception verified; even lengths all certified"
                        : (conclusion ? "every vertex certified on every length in [4,n]"
                                      : "missing required (vertex, length) cells");
      break;
    }

    case SuiteName::Corollary8: {
      report.length_lo = report.length_hi = 3;
      ReportCell cell;
      cell.length = 3;
      std::optional<RainbowCycleCert> tri;
      for (VertexId x = 0; x < n && !tri; ++x)
        for (VertexId y = x + 1; y < n && !tri; ++y)
          tri = triangle_via_common_neighborhood(fam, x, y);
      if (!tri) tri = find_rainbow_cycle(fam, 3);
      ExceptionEvidence ev = detect_bipartite_exception(fam);
      if (ev.verdict) report.exception = ev;
      if (tri && recheck_cert(fam, *tri)) {
        cell.status = CellStatus::Found;
        cell.cert = report.add_cert(std::move(*tri));
        conclusion = true;
      } else if (report.exception) {
        cell.required = false;
        conclusion = true;
      }
      report.cells.push_back(cell);
      report.note = cell.status == CellStatus::Found
                        ? "rainbow triangle found"
                        : (report.exception ? "no rainbow triangle: bipartite exception verified"
                                            : "no rainbow triangle");
      break;
    }

    case SuiteName::Theorem9: {
      report.length_lo = 3;
      report.length_hi = n;
      report.per_vertex = true;
      in_budget = fill_vertex_cells(fam, report, 3, /*allow_exception=*/false, deadline);
      conclusion = true;
      for (const ReportCell& cell : report.cells)
        if (cell.status != CellStatus::Found) conclusion = false;
      report.note = conclusion ? "every vertex certified on every length in [3,n]"
                               : "family is not rainbow vertex-pancyclic";
      break;
    }
  }

  report.range_complete = true;
  for (const ReportCell& cell : report.cells)
    if (cell.status != CellStatus::Found) report.range_complete = false;

  if (!in_budget) {
    report.pass = false;
    report.note += "; TIME BUDGET EXCEEDED, remaining cells skipped";
  } else if (suite == SuiteName::Conjecture10Search) {
    report.pass = !(report.hypothesis_met && !conclusion);
  } else if (!report.hypothesis_met) {
    report.pass = true;  // nothing asserted below the threshold; still reported
    report.note += "; hypothesis not met (sigma below threshold), family surveyed only";
  } else {
    report.pass = conclusion;
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

SuiteOutcome run_suite(const SuiteConfig& config, std::ostream* jsonl_out) {
  if (config.samples < 1 && !config.family_path)
    throw UsageError("suite: needs samples >= 1 or an explicit family");
  if (!config.family_path && (config.n_min < 3 || config.n_min > config.n_max))
    throw UsageError("suite: invalid n range");

  const double budget = resolve_time_budget_sec(config.time_budget_sec);
  SuiteOutcome outcome;

  auto emit = [&](VerificationReport report) {
    if (jsonl_out) *jsonl_out << report_to_json(report).dump() << "\n";
    if (report.generation_failed)
      ++outcome.generation_failures;
    else if (report.pass)
      ++outcome.passed;
    else
      ++outcome.failed;
    outcome.reports.push_back(std::move(report));
  };

  if (config.family_path) {
    GraphFamily fam = load_family(*config.family_path);
    emit(run_suite_on_family(config.suite, fam, 0, budget));
  } else {
    const int span = config.n_max - config.n_min + 1;
    for (int k = 0; k < config.samples; ++k) {
      const int n = config.n_min + (k % span);
      GeneratorConfig gen;
      gen.n = n;
      gen.sigma_threshold = suite_sigma_threshold(config.suite, n);
      gen.seed = Rng::derive(config.seed, static_cast<std::uint64_t>(k));

      // Every fourth sample perturbs an extremal family when one exists for
      // this n; that probes the boundary of the exception clause.  Only the
      // sigma >= n suites can use it: the extremal families sit strictly
      // below the stronger threshold, which is the point of their sharpness.
      const bool extremal_ok = (n >= 4 && n % 2 == 0) || (n >= 7 && n % 3 == 1);
      const bool threshold_is_n = config.suite == SuiteName::Theorem5 ||
                                  config.suite == SuiteName::Theorem7 ||
                                  config.suite == SuiteName::Corollary8;
      if (threshold_is_n && k % 4 == 3 && extremal_ok) {
        gen.mode = GeneratorMode::PerturbExtremal;
        gen.mutation_budget = 2 * n;
      }

      const auto gen_start = Clock::now();
      try {
        GraphFamily fam = config.suite == SuiteName::Conjecture10Search
                              ? generate_family_with_per_graph_ore_at_least(gen)
                              : generate_family_with_sigma_at_least(gen);
        const double gen_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - gen_start).count();
        VerificationReport report = run_suite_on_family(config.suite, fam, k, budget);
        report.generation_ms = gen_ms;
        emit(std::move(report));
      } catch (const GenerationFailure& e) {
        VerificationReport report;
        report.suite = to_string(config.suite);
        report.family_index = k;
        report.n = n;
        report.generation_failed = true;
        report.note = e.what();
        report.generation_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - gen_start).count();
        emit(std::move(report));
      }
    }
  }

  outcome.pass = outcome.failed == 0 && outcome.generation_failures == 0 && outcome.passed > 0;

  if (jsonl_out) {
    nlohmann::ordered_json summary;
    summary["summary"] = nlohmann::ordered_json{{"suite", to_string(config.suite)},
                                                {"families", outcome.reports.size()},
                                                {"passed", outcome.passed},
                                                {"failed", outcome.failed},
                                                {"generation_failures", outcome.generation_failures},
                                                {"verdict", outcome.pass ? "pass" : "fail"}};
    *jsonl_out << summary.dump() << "\n";
  }
  return outcome;
}

}  // namespace rainbow
