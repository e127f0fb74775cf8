// Microbenchmarks for the hot kernels: sigma, the cycle search, a reroute,
// and certificate verification.  Run manually:
//   ./build/benchmarks/rainbow_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "rainbow/family.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/rotation.hpp"

namespace {

using namespace rainbow;

GraphFamily complete_family(int n) {
  GraphFamily fam(n);
  for (ColorId c = 0; c < n; ++c)
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) fam.add_edge(c, u, v);
  return fam;
}

GraphFamily dense_random_family(int n, std::uint64_t seed) {
  Rng rng(seed);
  GraphFamily fam(n);
  for (ColorId c = 0; c < n; ++c)
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.chance(0.7)) fam.add_edge(c, u, v);
  return fam;
}

void BM_Sigma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GraphFamily fam = dense_random_family(n, 1);
  for (auto _ : state) {
    SigmaValue s = sigma(fam);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Sigma)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_HamiltonianSearchComplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GraphFamily fam = complete_family(n);
  for (auto _ : state) {
    auto cert = find_rainbow_cycle(fam, n);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_HamiltonianSearchComplete)->Arg(8)->Arg(12)->Arg(16);

void BM_HamiltonianSearchSigmaFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratorConfig gen{n, n, 7, -1, GeneratorMode::RepairToThreshold};
  GraphFamily fam = generate_family_with_sigma_at_least(gen);
  for (auto _ : state) {
    auto cert = find_rainbow_cycle(fam, n);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_HamiltonianSearchSigmaFamily)->Arg(8)->Arg(10)->Arg(12);

void BM_ChordPairReroute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GraphFamily fam = complete_family(n);
  RainbowCycleCert ham;
  for (int k = 0; k < n; ++k) {
    ham.vertices.push_back(k);
    ham.colors.push_back(k);
  }
  for (auto _ : state) {
    RerouteOutcome out = chord_pair_reroute(fam, ham, 0, 3, 0, 2);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ChordPairReroute)->Arg(16)->Arg(64)->Arg(256);

void BM_VerifyCycleCert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GraphFamily fam = complete_family(n);
  RainbowCycleCert cert;
  for (int k = 0; k < n; ++k) {
    cert.vertices.push_back(k);
    cert.colors.push_back(k);
  }
  for (auto _ : state) {
    auto violations = verify_cycle_cert(fam, cert);
    benchmark::DoNotOptimize(violations);
  }
}
BENCHMARK(BM_VerifyCycleCert)->Arg(16)->Arg(64)->Arg(256);

void BM_ConstructivePancyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratorConfig gen{n, n, 11, -1, GeneratorMode::RepairToThreshold};
  GraphFamily fam = generate_family_with_sigma_at_least(gen);
  for (auto _ : state) {
    VertexPancyclicResult r = constructive_vertex_pancyclic(fam, 0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ConstructivePancyclic)->Arg(8)->Arg(10);

}  // namespace
