#include <benchmark/benchmark.h>

#include <string>

#include "dimer/reid.hpp"

using namespace dimer;

namespace {

const DimerModel& hexagon_10() {
  static const DimerModel model = load_dimer(std::string(DIMER_FIXTURE_DIR) + "/hexagon_10.json");
  return model;
}

const Fan& hexagon_10_fan() {
  static const Fan fan = build_fan(hexagon_10(), special_theta(hexagon_10().num_vertices));
  return fan;
}

void BM_PerfectMatchings(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_matchings(hexagon_10()));
}
BENCHMARK(BM_PerfectMatchings);

void BM_BuildFan(benchmark::State& state) {
  const auto theta = special_theta(hexagon_10().num_vertices);
  for (auto _ : state) benchmark::DoNotOptimize(build_fan(hexagon_10(), theta));
}
BENCHMARK(BM_BuildFan);

void BM_ChamberWalls(benchmark::State& state) {
  const auto theta = special_theta(hexagon_10().num_vertices);
  for (auto _ : state) benchmark::DoNotOptimize(chamber_and_walls(hexagon_10(), hexagon_10_fan(), theta));
}
BENCHMARK(BM_ChamberWalls);

void BM_ClassifyPsi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_psi(hexagon_10(), hexagon_10_fan()));
}
BENCHMARK(BM_ClassifyPsi);

void BM_HMinus1Routes(benchmark::State& state) {
  const auto w = build_wheel(hexagon_10(), hexagon_10_fan(), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hminus1_filtration(w, hexagon_10_fan()));
    benchmark::DoNotOptimize(hminus1_criterion(w, hexagon_10_fan()));
  }
}
BENCHMARK(BM_HMinus1Routes);

}  // namespace

BENCHMARK_MAIN();
