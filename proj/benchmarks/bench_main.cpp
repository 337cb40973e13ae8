#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "cloneforge/clone_gen.hpp"
#include "cloneforge/deviant_gen.hpp"
#include "cloneforge/eval.hpp"
#include "cloneforge/objective.hpp"
#include "cloneforge/rng.hpp"
#include "cloneforge/tokenizer.hpp"

namespace {

using namespace cloneforge;

const char* kFunction = R"(int count_above(int *arr, int n, int limit) {
  int total = 0;
  for (int i = 0; i < n; i++) {
    if (arr[i] > limit) {
      total += 1;
    } else {
      total = total > 0 ? total - 1 : 0;
    }
  }
  return total;
}
)";

std::vector<double> gaussian(Rng& rng, std::size_t d) {
  std::vector<double> v(d);
  for (double& x : v) x = rng.normal();
  return v;
}

std::vector<std::vector<std::string>> token_corpus(std::size_t n) {
  Rng rng(1);
  const std::vector<std::string> words = {"count", "total", "index", "limit", "buffer",
                                          "value", "result", "size", "node", "next"};
  std::vector<std::vector<std::string>> out(n);
  for (auto& s : out) {
    for (int t = 0; t < 40; ++t) {
      s.push_back(words[rng.below(words.size())] + "_" + words[rng.below(words.size())]);
    }
  }
  return out;
}

void BM_TokenizerEncode(benchmark::State& state) {
  const auto corpus = token_corpus(200);
  const tokenizer::SubwordModel model = tokenizer::train_subword(corpus, 400);
  const auto& tokens = corpus.front();
  const std::vector<std::int32_t> labels(tokens.size(), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tokenizer::encode(model, tokens, labels));
  }
}
BENCHMARK(BM_TokenizerEncode);

void BM_TokenizerTrain(benchmark::State& state) {
  const auto corpus = token_corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tokenizer::train_subword(corpus, 600));
  }
}
BENCHMARK(BM_TokenizerTrain)->Arg(100)->Arg(400);

void BM_ClrLoss(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  objective::ContrastiveBatch batch;
  for (std::size_t i = 0; i < n; ++i) {
    batch.anchors.push_back(gaussian(rng, 64));
    batch.positives.push_back(gaussian(rng, 64));
    batch.negatives.push_back(gaussian(rng, 64));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective::clr_gradient(batch));
  }
}
BENCHMARK(BM_ClrLoss)->Arg(8)->Arg(32)->Arg(128);

void BM_MapAtR(benchmark::State& state) {
  const auto groups = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  eval::RetrievalDataset ds;
  ds.r = 3;
  for (std::size_t g = 0; g < groups; ++g) {
    for (int k = 0; k < 4; ++k) {
      ds.items.push_back({std::to_string(g) + "/" + std::to_string(k), gaussian(rng, 64),
                          std::to_string(g)});
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval::map_at_r(ds));
  }
}
BENCHMARK(BM_MapAtR)->Arg(25)->Arg(100);

void BM_GenerateClone(benchmark::State& state) {
  const ast::SourceFunction fn{"count_above", Language::C, kFunction};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(clone::generate_clone(fn, seed++));
  }
}
BENCHMARK(BM_GenerateClone);

void BM_GenerateDeviant(benchmark::State& state) {
  const ast::SourceFunction fn{"count_above", Language::C, kFunction};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(deviant::generate_deviant(fn, seed++));
  }
}
BENCHMARK(BM_GenerateDeviant);

}  // namespace
BENCHMARK_MAIN();
