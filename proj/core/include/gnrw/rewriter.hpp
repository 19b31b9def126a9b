#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gnrw/filter.hpp"
#include "gnrw/lexicon.hpp"
#include "gnrw/ngram_lm.hpp"
#include "gnrw/token.hpp"
#include "gnrw/verb_lexicon.hpp"

namespace gnrw {

struct RewriteOptions {
  // Rewrite whatever gendered tokens are present even when the sentence scans
  // as neutral or mixed (those normally raise RewriteError).
  bool bypass_gender_check = false;
};

enum class EditCategory { pronoun, verb, noun };

struct Edit {
  std::size_t position = 0;  // token index in the tokenized source
  std::string before;        // original surface
  std::string after;         // replacement surface
  EditCategory category = EditCategory::pronoun;
  bool ambiguous = false;    // more than one candidate existed
  std::vector<std::string> alternatives_considered;  // case-matched candidates
};

struct RewriteTrace {
  std::string source;
  std::string output;
  GenderScan source_gender = GenderScan::none;
  std::vector<Edit> edits;            // sorted by token position
  std::size_t candidates_scored = 0;  // language-model evaluations performed
  double chosen_perplexity = 0.0;     // of the final output; 0 without a model
};

struct InflectResult {
  std::string source;
  std::string output;
  GenderScan from = GenderScan::none;
  std::vector<Edit> edits;
};

class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rewrites single-gendered sentences into singular-they form: unambiguous
// substitutions straight from the lexicon, verb agreement repaired through
// shallow clause analysis, and his/her/he's/she's resolved by perplexity
// under the attached model (first listed alternative when none is attached).
// Thread-safe: rewriting never mutates the rewriter.
class Rewriter {
 public:
  // All three referents must outlive the rewriter; `model` may be null.
  Rewriter(const Lexicon& lexicon, const VerbLexicon& verbs,
           const NgramLM* model = nullptr);

  RewriteTrace rewrite(std::string_view text,
                       const RewriteOptions& options = {}) const;

  struct BatchItem {
    bool ok = false;
    RewriteTrace trace;   // valid when ok
    std::string error;    // RewriteError message when !ok
  };
  // Rewrites lines in order; `jobs` threads (0 or 1 = sequential) shard the
  // input into contiguous ranges, so output order never depends on timing.
  std::vector<BatchItem> rewrite_batch(const std::vector<std::string>& lines,
                                       const RewriteOptions& options = {},
                                       unsigned jobs = 1) const;

  // Swaps the sentence to the opposite gender (she walks -> he walks),
  // leaving gendered nouns alone. The object/possessive readings of her/his
  // are resolved by first rewriting to neutral form and mapping the chosen
  // alternative back. Throws RewriteError when the sentence is not
  // single-gendered.
  InflectResult inflect_sentence(std::string_view text) const;

  const Lexicon& lexicon() const { return *lex_; }
  const VerbLexicon& verbs() const { return *verbs_; }
  const NgramLM* model() const { return model_; }

 private:
  const Lexicon* lex_;
  const VerbLexicon* verbs_;
  const NgramLM* model_;
};

// Compact single-line JSON for one trace (for JSONL trace files).
std::string trace_to_json(const RewriteTrace& trace);

const char* to_string(EditCategory c);

}  // namespace gnrw
