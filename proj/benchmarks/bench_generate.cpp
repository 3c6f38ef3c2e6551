#include <benchmark/benchmark.h>

#include "avoidgray/classify.hpp"
#include "avoidgray/generator.hpp"
#include "avoidgray/matcher.hpp"

namespace {

using namespace avoidgray;

ForbiddenFactor make_factor(const char* text, std::uint32_t q) {
  return ForbiddenFactor(Word::parse(text), Alphabet(q));
}

void run_stream(benchmark::State& state, const GenerationPlan& p) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t words = 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    WordStream stream(p, n);
    while (stream.next()) benchmark::DoNotOptimize(stream.current());
    words = stream.emitted();
    nodes = stream.nodes_visited();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words));
  state.counters["words"] = static_cast<double>(words);
  state.counters["nodes_per_word"] = static_cast<double>(nodes) / static_cast<double>(words);
}

void BM_Unrestricted(benchmark::State& state) {
  run_stream(state, plan_unrestricted(Alphabet(static_cast<std::uint32_t>(state.range(1)))));
}
BENCHMARK(BM_Unrestricted)->Args({16, 2})->Args({10, 3})->Args({8, 4});

void BM_MidSymbol(benchmark::State& state) { run_stream(state, plan(make_factor("0121", 4))); }
BENCHMARK(BM_MidSymbol)->Arg(8)->Arg(10);

void BM_EndZero(benchmark::State& state) { run_stream(state, plan(make_factor("2300", 4))); }
BENCHMARK(BM_EndZero)->Arg(8)->Arg(10);

void BM_PhiConjugate(benchmark::State& state) { run_stream(state, plan(make_factor("130", 4))); }
BENCHMARK(BM_PhiConjugate)->Arg(8)->Arg(10);

void BM_DualOrder(benchmark::State& state) { run_stream(state, plan(make_factor("31000", 5))); }
BENCHMARK(BM_DualOrder)->Arg(8)->Arg(9);

void BM_ChainDirect(benchmark::State& state) {
  run_stream(state, plan(make_factor("01", 2), PlanOptions{std::nullopt, Strategy::direct}));
}
BENCHMARK(BM_ChainDirect)->Arg(64)->Arg(256);

void BM_ChainStaircase(benchmark::State& state) { run_stream(state, plan(make_factor("01", 2))); }
BENCHMARK(BM_ChainStaircase)->Arg(64)->Arg(256);

void BM_TransitionTable(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  Word w;
  for (std::size_t i = 0; i < l; ++i) w.push_back(static_cast<Symbol>(i % 7));
  const ForbiddenFactor f(w, Alphabet(16));
  for (auto _ : state) benchmark::DoNotOptimize(build_transition_table(f));
}
BENCHMARK(BM_TransitionTable)->Arg(16)->Arg(256)->Arg(4096);

void BM_CountAvoiding(benchmark::State& state) {
  const ForbiddenFactor f = make_factor("012011", 4);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiding(f, n));
}
BENCHMARK(BM_CountAvoiding)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
