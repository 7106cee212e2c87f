#include <benchmark/benchmark.h>

#include "catkit/braid.hpp"
#include "catkit/duoid.hpp"
#include "catkit/gl_classes.hpp"
#include "catkit/mackey.hpp"
#include "catkit/planar_diagram.hpp"
#include "catkit/species.hpp"
#include "catkit/subspace.hpp"
#include "catkit/ybrep.hpp"

using namespace catkit;

static void BM_BraidRep(benchmark::State& state) {
  const auto e = yb::builtin_jones();
  const int n = static_cast<int>(state.range(0));
  braid::BraidWord b{n, {}};
  for (int i = 1; i < n; ++i) b.word.insert(b.word.end(), {i, -i, i});
  for (auto _ : state) benchmark::DoNotOptimize(yb::braid_rep(b, e.yb));
}
BENCHMARK(BM_BraidRep)->DenseRange(2, 5);

static void BM_EybInvariant(benchmark::State& state) {
  const auto e = yb::builtin_jones();
  const braid::BraidWord b{3, {1, -2, 1, -2, 1, -2}};
  for (auto _ : state) benchmark::DoNotOptimize(yb::eyb_invariant(b, e));
}
BENCHMARK(BM_EybInvariant);

static void BM_Bracket(benchmark::State& state) {
  const braid::BraidWord b{2, std::vector<int>(static_cast<std::size_t>(state.range(0)), 1)};
  const auto pd = braid::markov_closure(b);
  for (auto _ : state) benchmark::DoNotOptimize(braid::kauffman_bracket(pd));
}
BENCHMARK(BM_Bracket)->DenseRange(4, 12, 4);

static void BM_CauchyProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = species::ClassFunction::constant(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(species::cauchy_product(f, f));
}
BENCHMARK(BM_CauchyProduct)->DenseRange(1, 4);

static void BM_Plethysm(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(species::plethysm(species::exp_series(deg), species::exp_plus_series(deg)));
}
BENCHMARK(BM_Plethysm)->DenseRange(4, 8, 2);

static void BM_EnumerateSubspaces(benchmark::State& state) {
  const hall::FiniteField f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hall::enumerate_subspaces(3, 1, f));
}
BENCHMARK(BM_EnumerateSubspaces)->Arg(2)->Arg(3)->Arg(5);

static void BM_GreenConvolution(benchmark::State& state) {
  const hall::FiniteField f(static_cast<int>(state.range(0)));
  const auto one = hall::GLClassFunction::constant(1, f, 1);
  hall::conj_classes(2, f);
  for (auto _ : state) benchmark::DoNotOptimize(hall::green_convolution(one, one, f));
}
BENCHMARK(BM_GreenConvolution)->Arg(2)->Arg(3);

static void BM_MackeyValidate(benchmark::State& state) {
  const auto g = std::make_shared<const mackey::FiniteGroup>(mackey::FiniteGroup::dihedral(4));
  const auto m = mackey::fixed_point_mackey(mackey::GSet::regular(g));
  for (auto _ : state) benchmark::DoNotOptimize(mackey::mackey_axioms_validate(m));
}
BENCHMARK(BM_MackeyValidate);

static void BM_BoxProduct(benchmark::State& state) {
  const auto g = std::make_shared<const mackey::FiniteGroup>(mackey::FiniteGroup::symmetric(3));
  const auto m = mackey::fixed_point_mackey(mackey::GSet::regular(g));
  const auto j = mackey::burnside_mackey(g);
  for (auto _ : state) benchmark::DoNotOptimize(mackey::box_product(j, m));
}
BENCHMARK(BM_BoxProduct);

static void BM_DuoidValidate(benchmark::State& state) {
  const auto c = std::make_shared<const duoidal::FiniteCategory>(duoidal::FiniteCategory::cyclic_monoid(2));
  const auto d = duoidal::cyclic_duoid(c, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(duoidal::duoid_validate(d));
}
BENCHMARK(BM_DuoidValidate)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
