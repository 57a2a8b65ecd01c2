#include <benchmark/benchmark.h>

#include "csg/braid.hpp"
#include "csg/kan.hpp"
#include "csg/operad.hpp"
#include "csg/random.hpp"
#include "csg/symmetric.hpp"

namespace {

void BM_PermMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  csg::Rng rng(1);
  const auto g = rng.perm(n);
  const auto h = rng.perm(n);
  for (auto _ : state) benchmark::DoNotOptimize(g * h);
}
BENCHMARK(BM_PermMul)->Arg(4)->Arg(16)->Arg(64);

void BM_FacePerm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  csg::Rng rng(2);
  const auto g = rng.perm(n);
  for (auto _ : state) benchmark::DoNotOptimize(csg::face_perm(n / 2, g));
}
BENCHMARK(BM_FacePerm)->Arg(4)->Arg(64);

// Equality of two spellings of the same braid through the Artin action.
void BM_BraidEqual(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  csg::Rng rng(3);
  auto g = rng.braid(4, len);
  while (g.length() < len / 2) g = rng.braid(4, len);
  const auto h = csg::braid_mul(csg::braid_mul(g, csg::braid_inv(g)), g);
  for (auto _ : state) benchmark::DoNotOptimize(csg::braids_equal(g, h));
  state.SetLabel("letters=" + std::to_string(g.length()));
}
BENCHMARK(BM_BraidEqual)->Arg(8)->Arg(16)->Arg(32);

void BM_CircSetSymmetric(benchmark::State& state) {
  csg::Rng rng(4);
  const auto a = rng.perm(6);
  const auto b = rng.perm(4);
  for (auto _ : state) benchmark::DoNotOptimize(csg::circ_set<csg::Symmetric>(a, 3, b));
}
BENCHMARK(BM_CircSetSymmetric);

void BM_CircSetBraid(benchmark::State& state) {
  csg::Rng rng(5);
  const auto a = rng.braid(3, 12);
  const auto b = rng.braid(2, 12);
  for (auto _ : state) benchmark::DoNotOptimize(csg::circ_set<csg::Braid>(a, 1, b));
}
BENCHMARK(BM_CircSetBraid);

void BM_LiftHorn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  csg::Rng rng(6);
  const auto filler = rng.braid(n, 12);
  const auto horn = csg::horn_from_filler<csg::Braid>(filler, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(csg::lift_horn<csg::Braid>(horn));
}
BENCHMARK(BM_LiftHorn)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
