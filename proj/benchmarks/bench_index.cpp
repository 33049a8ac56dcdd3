#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "cloneseek/annotate.hpp"
#include "cloneseek/docbuild.hpp"
#include "cloneseek/index.hpp"
#include "cloneseek/index_io.hpp"
#include "cloneseek/search.hpp"

using namespace cloneseek;

namespace {

struct Synthetic {
  std::vector<NaturalLanguageDocument> docs;
  std::vector<CloneMethodRef> refs;
};

// Zipf-ish term draws over a vocabulary of `vocab` terms, 20-60 terms per document.
Synthetic synthetic_corpus(std::size_t n_docs, std::size_t vocab) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> len(20, 60);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Synthetic s;
  for (std::size_t i = 0; i < n_docs; ++i) {
    NaturalLanguageDocument d{static_cast<DocId>(i), static_cast<ClassId>(i % 50 + 1), {}};
    for (std::size_t n = len(rng); n > 0; --n) {
      const auto rank = static_cast<std::size_t>(std::pow(static_cast<double>(vocab), u(rng))) - 1;
      d.terms.push_back("t" + std::to_string(rank));
    }
    s.docs.push_back(std::move(d));
    s.refs.push_back(CloneMethodRef{static_cast<DocId>(i), static_cast<ClassId>(i % 50 + 1), "Gen.java", 1, 30});
  }
  return s;
}

void BM_BuildIndex(benchmark::State& state) {
  const auto s = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 5000);
  for (auto _ : state) benchmark::DoNotOptimize(build_index(s.docs, s.refs, AnnotationStrategy::baseline()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildIndex)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const auto s = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 5000);
  const auto idx = build_index(s.docs, s.refs, AnnotationStrategy::baseline());
  Query q;
  q.terms = {"t3", "t17", "t250", "t1024", "t4000"};
  for (auto _ : state) benchmark::DoNotOptimize(search(idx, q, kDefaultTextTopK));
}
BENCHMARK(BM_Search)->Arg(1000)->Arg(10000)->Arg(50000);

void BM_CodeQuerySearch(benchmark::State& state) {
  const auto s = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 5000);
  const auto idx = build_index(s.docs, s.refs, AnnotationStrategy::baseline());
  Query q;
  q.mode = QueryMode::code;
  q.terms = s.docs[7].terms;
  for (auto _ : state) benchmark::DoNotOptimize(search(idx, q, kDefaultEvalTopK));
}
BENCHMARK(BM_CodeQuerySearch)->Arg(1000)->Arg(10000);

void BM_SerializeIndex(benchmark::State& state) {
  const auto s = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 5000);
  const auto idx = build_index(s.docs, s.refs, AnnotationStrategy::baseline());
  for (auto _ : state) benchmark::DoNotOptimize(serialize_index(idx));
}
BENCHMARK(BM_SerializeIndex)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ParseIndex(benchmark::State& state) {
  const auto s = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 5000);
  const auto text = serialize_index(build_index(s.docs, s.refs, AnnotationStrategy::baseline()));
  for (auto _ : state) benchmark::DoNotOptimize(parse_index(text));
}
BENCHMARK(BM_ParseIndex)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
