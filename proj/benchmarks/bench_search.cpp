#include <benchmark/benchmark.h>

#include <random>

#include "splitcyc/cyclic_ledger.hpp"
#include "splitcyc/enumerate.hpp"
#include "splitcyc/voltage.hpp"

using namespace splitcyc;

static void BM_LedgerInsertErase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CyclicLedger ledger(n);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pos(0, n - 1);
  for (auto _ : state) {
    const int i = pos(rng);
    if (ledger.at(i) == Color::None) {
      ledger.insert(i, (i & 1) ? Color::Red : Color::Blue);
    } else {
      ledger.erase(i);
    }
    benchmark::DoNotOptimize(ledger.changes());
  }
}
BENCHMARK(BM_LedgerInsertErase)->Arg(18)->Arg(1024)->Arg(1 << 16);

static void BM_LedgerNextPrev(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CyclicLedger ledger(n);
  for (int i = 0; i < n; i += 97) ledger.insert(i, Color::Red);
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ledger.next(i) + ledger.prev(i));
    benchmark::DoNotOptimize(ledger.count_between(Color::Red, i, (i + n / 2) % n));
    i = (i + 31) % n;
  }
}
BENCHMARK(BM_LedgerNextPrev)->Arg(1024)->Arg(1 << 16);

static void BM_ExtendRetract(benchmark::State& state) {
  const RotationMap m = derive(gross_tucker_base(1));
  SearchState st(m, 0);
  // a fixed prefix, then repeatedly try every neighbor of its end
  for (Vertex v : {1, 16, 2}) st.extend(v);
  for (auto _ : state) {
    const Vertex a = st.last();
    for (Vertex w : m.rotation(a)) {
      if (st.on_path(w)) continue;
      if (st.extend(w)) st.retract();
    }
  }
}
BENCHMARK(BM_ExtendRetract);

static void BM_EnumerateBounded(benchmark::State& state) {
  const RotationMap m = derive(gross_tucker_base(1));
  SearchOptions opt;
  opt.assume_transitive = true;
  opt.max_length = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(m, 0, opt).visited);
}
BENCHMARK(BM_EnumerateBounded)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
