#include <benchmark/benchmark.h>

#include "qtree/engine.hpp"
#include "qtree/hopf.hpp"
#include "qtree/rng.hpp"

using namespace qtree;

namespace {

Element magic_square_sum(int k, int depth) {
  Element out(k);
  for (const Word& u : enumerate_words(Alphabet(k), depth)) {
    for (const Word& v : enumerate_words(Alphabet(k), depth)) {
      out += Element::from_generator(k, Generator(u, v));
    }
  }
  return out;
}

}  // namespace

static void BM_reduce_magic_square(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Element big = magic_square_sum(k, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce(big).result);
  }
}
BENCHMARK(BM_reduce_magic_square)->Arg(2)->Arg(3);

static void BM_random_products(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(42);
  std::vector<Element> xs, ys;
  for (int i = 0; i < 32; ++i) {
    xs.push_back(random_element(rng, k, 2, 2, 4));
    ys.push_back(random_element(rng, k, 2, 2, 4));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 32] * ys[(i + 7) % 32]);
    ++i;
  }
}
BENCHMARK(BM_random_products)->Arg(2)->Arg(3);

static void BM_prove_zero_unitarity(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Element sum(k);
  Word u = Word{0}.append(0), v = Word{0}.append(1);
  for (const Word& w : enumerate_words(Alphabet(k), 2)) {
    sum += Element::from_generator(k, Generator(u, w)) *
           Element::from_generator(k, Generator(v, w));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(prove_zero(sum).certificate);
  }
}
BENCHMARK(BM_prove_zero_unitarity)->Arg(2)->Arg(3);

static void BM_delta_depth2(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Element a = Element::from_generator(
      k, Generator(Word{0, 1 % k}, Word{1 % k, 0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta(a));
  }
}
BENCHMARK(BM_delta_depth2)->Arg(2)->Arg(3);
