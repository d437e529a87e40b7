#include <benchmark/benchmark.h>

#include "reldp/chain.hpp"
#include "reldp/parse.hpp"
#include "reldp/proof.hpp"

namespace {

using namespace reldp;

const char* kMinusTrs = R"((VAR x y)
(RULES
  minus(x, 0) -> x
  minus(s(x), s(y)) -> minus(x, y)
))";

const char* kLoopTrs = R"((VAR x)
(RULES
  f(x) -> f(g(x))
  g(x) -> x ->= g(g(x))
))";

// Variant with the weak rule split out correctly for parsing.
const char* kLoopRdp = R"((STRICT-PAIRS
  F#(x) -> F#(g(x))
)
(WEAK-PAIRS)
(STRICT-RULES)
(WEAK-RULES
  g(x) ->= x
))";

void BM_Unify(benchmark::State& state) {
  Term x = Term::var("x"), y = Term::var("y");
  Term l = Term::fun("f", {Term::fun("g", {x}), y});
  Term r = Term::fun("f", {y, Term::fun("g", {Term::fun("a", {})})});
  for (auto _ : state) benchmark::DoNotOptimize(unify(l, r));
}
BENCHMARK(BM_Unify);

void BM_DependencyPairs(benchmark::State& state) {
  ParsedTrs trs = parse_trs(kMinusTrs);
  for (auto _ : state) benchmark::DoNotOptimize(dependency_pairs(trs.strict));
}
BENCHMARK(BM_DependencyPairs);

void BM_FindWitnessLoop(benchmark::State& state) {
  RelativeDpp d = parse_rdp(kLoopRdp);
  OracleBounds b{4, 5, 50};
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(d, b));
}
BENCHMARK(BM_FindWitnessLoop);

void BM_ProveMinus(benchmark::State& state) {
  ParsedTrs trs = parse_trs(kMinusTrs);
  RelativeDpp d = initial(trs.strict, trs.weak);
  Strategy s = default_strategy();
  for (auto _ : state) benchmark::DoNotOptimize(prove(d, s));
}
BENCHMARK(BM_ProveMinus);

}  // namespace

BENCHMARK_MAIN();
