#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gnrw {

// Interpolated modified-count n-gram model with a single fixed discount
// (Kneser-Ney style). Sentences are padded with one <s> and one </s>; words
// seen fewer than unk_threshold times collapse into <unk>. Lower-order counts
// are left-extension type counts except for <s>-initial grams, which keep raw
// counts. Every conditional distribution sums to one over the prediction
// vocabulary (everything but <s>).
class NgramLM {
 public:
  struct Config {
    int order = 3;          // 2..8
    int unk_threshold = 2;  // words seen fewer times than this become <unk>
  };

  NgramLM() = default;
  explicit NgramLM(Config cfg);

  // Lowercased token stream for one line of text, as used for both training
  // and scoring (all token kinds, punctuation included).
  static std::vector<std::string> text_to_tokens(std::string_view line);

  void train(const std::vector<std::vector<std::string>>& sentences);
  bool trained() const { return trained_; }

  // Natural log of p(tokens, </s>); tokens outside the vocabulary score as
  // <unk>.
  double log_prob(const std::vector<std::string>& tokens) const;
  // exp(-log_prob / (tokens.size() + 1)); the end marker counts as a token.
  // Throws std::invalid_argument for an empty sentence.
  double perplexity(const std::vector<std::string>& tokens) const;
  // p(word | context), context truncated to the most recent order-1 tokens.
  double cond_prob(const std::vector<std::string>& context,
                   const std::string& word) const;

  int order() const { return cfg_.order; }
  const std::vector<std::string>& vocab() const { return vocab_; }

  // Training-corpus count of a k-gram after <unk> mapping and <s>/</s>
  // padding. Only populated by train(); a loaded model reports zero.
  std::uint64_t raw_count(const std::vector<std::string>& gram) const;
  std::size_t distinct_grams(int k) const;

  // Text format: "NNLM v1" header, one section per order with log10
  // probabilities and backoff weights, "\end\" terminator. Numbers use
  // shortest round-trip notation, entries are sorted, so save/load/save is
  // byte-identical and a loaded model scores bit-identically.
  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static NgramLM load(std::istream& in);
  static NgramLM load(const std::filesystem::path& path);

  static constexpr double kDiscount = 0.75;
  static constexpr const char* kBos = "<s>";
  static constexpr const char* kEos = "</s>";
  static constexpr const char* kUnk = "<unk>";

 private:
  struct Entry {
    double log10_prob = 0.0;
    double log10_backoff = 0.0;
  };

  double score_log10(const std::vector<std::string>& context,
                     const std::string& word) const;
  const std::string& map_word(const std::string& w) const;

  Config cfg_;
  bool trained_ = false;
  std::vector<std::string> vocab_;               // sorted, includes specials
  std::unordered_set<std::string> vocab_set_;
  std::vector<std::unordered_map<std::string, Entry>> tables_;  // [k-1]
  std::vector<std::unordered_map<std::string, std::uint64_t>> raw_;
};

}  // namespace gnrw
