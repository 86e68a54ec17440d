#include <benchmark/benchmark.h>

#include "qtree/classical.hpp"

using namespace qtree;

static void BM_enumerate_aut(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_aut(2, d));
  }
}
BENCHMARK(BM_enumerate_aut)->Arg(2)->Arg(3)->Arg(4);

static void BM_abelian_eval(benchmark::State& state) {
  auto group = enumerate_aut(2, 3);
  Element sum(2);
  for (const Word& u : enumerate_words(Alphabet(2), 3)) {
    for (const Word& v : enumerate_words(Alphabet(2), 3)) {
      sum += Element::from_generator(2, Generator(u, v));
    }
  }
  for (auto _ : state) {
    Rational total = 0;
    for (const Portrait& g : group) total += abelian_eval(sum, g);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_abelian_eval);

static void BM_span_rank(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto group = enumerate_aut(2, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(indicator_span_rank(2, d, group));
  }
}
BENCHMARK(BM_span_rank)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
