#include <benchmark/benchmark.h>

#include "blw/hilbert.hpp"
#include "blw/lbm.hpp"
#include "blw/nd.hpp"
#include "blw/parse.hpp"
#include "blw/search.hpp"

namespace {

using namespace blw;

const char* kMedium = "((p -> q) & (q -> r)) -> ((p | q) * (q | r) -> (p -> r))";

void BM_ParseRender(benchmark::State& state) {
  for (auto _ : state) {
    const Formula f = parse_formula(kMedium);
    benchmark::DoNotOptimize(render(f));
  }
}
BENCHMARK(BM_ParseRender);

void BM_FormulaProfile(benchmark::State& state) {
  const LBMStructure m = random_lbm({"p", "q", "r"}, state.range(0), 4, 17);
  const Formula f = parse_formula(kMedium);
  for (auto _ : state) benchmark::DoNotOptimize(formula_profile(m, f));
}
BENCHMARK(BM_FormulaProfile)->Arg(1)->Arg(4)->Arg(16);

void BM_Holds(benchmark::State& state) {
  const LBMStructure m = random_lbm({"p", "q", "r"}, 4, 4, 23);
  const Sequent s = parse_sequent("p -> q, q -> r, p |- r | (p * q)");
  for (auto _ : state) benchmark::DoNotOptimize(holds(m, s));
}
BENCHMARK(BM_Holds);

void BM_EnumerateSloping(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sloping(4, 6));
}
BENCHMARK(BM_EnumerateSloping);

void BM_FindCountermodel(benchmark::State& state) {
  const Sequent s = parse_sequent("p -> q |- q -> p");
  for (auto _ : state)
    benchmark::DoNotOptimize(find_countermodel(s, {2, 3}, 1));
}
BENCHMARK(BM_FindCountermodel);

void BM_SearchExhaustive(benchmark::State& state) {
  // Validity within bounds: the full (k, n) product is scanned.
  const Sequent s = parse_sequent("|- (p->q)|(q->p)");
  const unsigned threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(find_countermodel(s, {3, 4}, threads));
}
BENCHMARK(BM_SearchExhaustive)->Arg(1)->Arg(2)->Arg(4);

void BM_CheckNdA8(benchmark::State& state) {
  const NDProof proof =
      axiom_derivation(AxiomId::A8, parse_formula("p | r"), parse_formula("q -> r"),
                       Formula::top());
  for (auto _ : state) benchmark::DoNotOptimize(&check_nd(proof));
}
BENCHMARK(BM_CheckNdA8);

void BM_HilbertToNd(benchmark::State& state) {
  HilbertProof p;
  p.lines.push_back({parse_formula("(p*q) -> (q*p)"), AxiomId::A3});
  p.lines.push_back({parse_formula("(q*p) -> p"), AxiomId::A4});
  p.lines.push_back(
      {parse_formula("((p*q) -> (q*p)) -> (((q*p) -> p) -> ((p*q) -> p))"), AxiomId::A2});
  p.lines.push_back({parse_formula("((q*p) -> p) -> ((p*q) -> p)"), MpRef{3, 1}});
  p.lines.push_back({parse_formula("(p*q) -> p"), MpRef{4, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_to_nd(p));
}
BENCHMARK(BM_HilbertToNd);

}  // namespace

BENCHMARK_MAIN();
