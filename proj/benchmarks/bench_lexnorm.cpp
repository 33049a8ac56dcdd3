#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "cloneseek/java_lexer.hpp"
#include "cloneseek/lexnorm.hpp"
#include "cloneseek/stopwords.hpp"

namespace {

// Deterministic Java-looking method of roughly `lines` lines.
std::string synthetic_method(std::size_t lines, std::uint64_t seed) {
  static const char* const kNames[] = {"inputStream", "bufferSize", "readLine", "HTTPClient", "parseJSONValue",
                                       "channelDest", "MAX_RETRIES", "userId", "tmpFile2", "getDeclaredMethod"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kNames) - 1);
  std::string src = "public static void process(File src, File dest) throws IOException {\n";
  for (std::size_t i = 0; i < lines; ++i) {
    src += "    final String ";
    src += kNames[pick(rng)];
    src += " = ";
    src += kNames[pick(rng)];
    src += ".apply(\"text literal\", 42, 'c'); // trailing note\n";
  }
  return src + "}\n";
}

void BM_LexJava(benchmark::State& state) {
  const auto src = synthetic_method(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cloneseek::lex_java(src));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_LexJava)->Arg(10)->Arg(100)->Arg(1000);

void BM_ExtractIdentifiers(benchmark::State& state) {
  const auto src = synthetic_method(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cloneseek::extract_identifiers(src));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ExtractIdentifiers)->Arg(10)->Arg(100)->Arg(1000);

void BM_ExtractWords(benchmark::State& state) {
  const std::string prose =
      "With Java reflection how to instantiate a new object, then call a method on it? "
      "Copy a file from source to destination while preserving the original attributes.";
  const auto& sw = cloneseek::StopwordSet::english();
  for (auto _ : state) benchmark::DoNotOptimize(cloneseek::extract_words(prose, sw));
}
BENCHMARK(BM_ExtractWords);

void BM_Stem(benchmark::State& state) {
  const char* const words[] = {"generalizations", "destination", "instantiate", "reflection", "hopefulness",
                               "running", "communication", "sky", "fis", "relational"};
  for (auto _ : state)
    for (const char* w : words) benchmark::DoNotOptimize(cloneseek::stem(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::size(words)));
}
BENCHMARK(BM_Stem);

}  // namespace

BENCHMARK_MAIN();
