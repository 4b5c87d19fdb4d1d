#include <benchmark/benchmark.h>

#include "permpoly/classify.hpp"
#include "permpoly/double_description.hpp"
#include "permpoly/face_cases.hpp"
#include "permpoly/face_lattice.hpp"
#include "permpoly/group.hpp"
#include "permpoly/lattice_isomorphism.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/reference.hpp"

using namespace permpoly;

namespace {

// S_n from a transposition and an n-cycle.
PermutationGroup symmetric(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? " " : ")");
  return PermutationGroup::generate({parse_cycles("(1 2)", n), parse_cycles(cycle, n)}, n);
}

void BM_GroupClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric(n).order());
}
BENCHMARK(BM_GroupClosure)->Arg(4)->Arg(5)->Arg(6);

void BM_FacetsBirkhoff(benchmark::State& state) {
  const auto p = build(symmetric(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(facet_enumeration(p.vpoly));
}
BENCHMARK(BM_FacetsBirkhoff)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FacetsTable1(benchmark::State& state) {
  const auto p = build(table1_group(table1_rows().at(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(facet_enumeration(p.vpoly));
}
BENCHMARK(BM_FacetsTable1)->DenseRange(0, 13)->Unit(benchmark::kMillisecond);

void BM_FaceLatticeCube(benchmark::State& state) {
  const auto p = build(canonical_group("cube(" + std::to_string(state.range(0)) + ")"));
  for (auto _ : state) benchmark::DoNotOptimize(face_lattice(p.vpoly));
}
BENCHMARK(BM_FaceLatticeCube)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_IsomorphismCrosspolytope(benchmark::State& state) {
  const auto a = face_lattice(build(canonical_group("crosspolytope(4)")).vpoly);
  const auto b = reference_lattice("crosspolytope(4)");
  for (auto _ : state) benchmark::DoNotOptimize(combinatorially_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphismCrosspolytope)->Unit(benchmark::kMillisecond);

void BM_FaceCase(benchmark::State& state, const char* name) {
  const auto c = build_face_case(name);
  for (auto _ : state) benchmark::DoNotOptimize(verify_face_case(c).pass);
}
BENCHMARK_CAPTURE(BM_FaceCase, P, "P")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FaceCase, hypersimplex, "hypersimplex")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
