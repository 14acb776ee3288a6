#include <benchmark/benchmark.h>

#include <random>

#include "lp_oracle.hpp"
#include "random_ra.hpp"
#include "rectfp/fixtures.hpp"
#include "rectfp/pipeline.hpp"

using namespace rectfp;

static void BM_SolveFixture(benchmark::State& state, const char* name) {
  const Project p = *find_fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(solve(p));
}
BENCHMARK_CAPTURE(BM_SolveFixture, grid2x2, "grid2x2");
BENCHMARK_CAPTURE(BM_SolveFixture, pinwheel, "pinwheel");
BENCHMARK_CAPTURE(BM_SolveFixture, eight_room, "eight_room");
BENCHMARK_CAPTURE(BM_SolveFixture, palladio, "palladio");

// One pass over a fixed set of random arrangements with exactly n rooms.
static void BM_SolveRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  testing::RandomRaOptions opts;
  opts.min_rooms = opts.max_rooms = static_cast<int>(state.range(0));
  std::vector<Project> projects;
  for (int i = 0; i < 16; ++i) projects.push_back(testing::random_project(rng, opts));
  std::size_t next = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve(projects[next++ % projects.size()]));
}
BENCHMARK(BM_SolveRandom)->Arg(4)->Arg(7)->Arg(10);

static void BM_SolveLp(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<LinearProgram> lps;
  for (int i = 0; i < 64; ++i) lps.push_back(testing::random_boxed_lp(rng));
  std::size_t next = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lps[next++ % lps.size()]));
}
BENCHMARK(BM_SolveLp);

static void BM_VerifyPalladio(benchmark::State& state) {
  const Project p = *find_fixture("palladio");
  const SolveResult r = solve(p);
  for (auto _ : state) benchmark::DoNotOptimize(verify(*r.floorplan, p.door));
}
BENCHMARK(BM_VerifyPalladio);

BENCHMARK_MAIN();
