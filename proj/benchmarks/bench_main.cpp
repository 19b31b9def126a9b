#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "gnrw/lexicon.hpp"
#include "gnrw/ngram_lm.hpp"
#include "gnrw/rewriter.hpp"
#include "gnrw/token.hpp"
#include "gnrw/verb_lexicon.hpp"

namespace {

const std::vector<std::string>& neutral_lines() {
  static const std::vector<std::string> lines = [] {
    const char* names[] = {"Avery", "Morgan", "Riley", "Jordan", "Casey"};
    const char* nouns[] = {"pen", "dog", "notebook", "bicycle", "garden"};
    const char* verbs[] = {"walks", "sings", "writes", "reads", "laughs"};
    std::vector<std::string> out;
    for (int i = 0; i < 400; ++i) {
      std::string n = names[i % 5], o = nouns[(i / 5) % 5], v = verbs[(i / 25) % 5];
      out.push_back(n + " " + v + " to work and they carry their " + o + ".");
      out.push_back("The " + o + " belongs to them because they like it.");
      out.push_back(n + " said that their " + o + " is at the office.");
    }
    return out;
  }();
  return lines;
}

const std::vector<std::string>& gendered_lines() {
  static const std::vector<std::string> lines = [] {
    std::vector<std::string> out;
    const char* subjects[] = {"She", "He"};
    const char* verbs[] = {"walks", "sings", "writes", "reads", "carries"};
    const char* poss[] = {"her", "his"};
    for (int i = 0; i < 500; ++i) {
      std::string s = subjects[i % 2], v = verbs[i % 5], p = poss[i % 2];
      out.push_back(s + " " + v + " to work every day and " + v +
                    " again at night with " + p + " dog.");
    }
    return out;
  }();
  return lines;
}

const gnrw::NgramLM& shared_model() {
  static const gnrw::NgramLM lm = [] {
    gnrw::NgramLM model(gnrw::NgramLM::Config{3, 1});
    std::vector<std::vector<std::string>> sents;
    for (const auto& line : neutral_lines())
      sents.push_back(gnrw::NgramLM::text_to_tokens(line));
    model.train(sents);
    return model;
  }();
  return lm;
}

void BM_Tokenize(benchmark::State& state) {
  const auto& lines = neutral_lines();
  std::size_t bytes = 0, i = 0;
  for (auto _ : state) {
    auto sent = gnrw::tokenize(lines[i % lines.size()]);
    benchmark::DoNotOptimize(sent);
    bytes += lines[i % lines.size()].size();
    ++i;
  }
  state.SetBytesProcessed(static_cast<int64_t>(bytes));
}
BENCHMARK(BM_Tokenize);

void BM_Perplexity(benchmark::State& state) {
  const auto& lm = shared_model();
  std::vector<std::vector<std::string>> token_lines;
  for (const auto& line : neutral_lines())
    token_lines.push_back(gnrw::NgramLM::text_to_tokens(line));
  std::size_t i = 0;
  for (auto _ : state) {
    double p = lm.perplexity(token_lines[i % token_lines.size()]);
    benchmark::DoNotOptimize(p);
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Perplexity);

void BM_Rewrite(benchmark::State& state) {
  static const gnrw::Lexicon lex = gnrw::builtin_lexicon();
  const auto& vlex = gnrw::builtin_verb_lexicon();
  const auto& lm = shared_model();
  gnrw::Rewriter rw(lex, vlex, &lm);
  const auto& lines = gendered_lines();
  std::size_t i = 0;
  for (auto _ : state) {
    auto trace = rw.rewrite(lines[i % lines.size()]);
    benchmark::DoNotOptimize(trace);
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Rewrite);

}  // namespace

BENCHMARK_MAIN();
