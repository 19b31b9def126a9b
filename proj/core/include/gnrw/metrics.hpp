#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "gnrw/filter.hpp"
#include "gnrw/lexicon.hpp"
#include "gnrw/verb_lexicon.hpp"

namespace gnrw {

struct BleuOptions {
  bool smoothed = false;  // add-one smoothing on the n>1 precisions
};

// Corpus-level BLEU (1..4-grams, geometric mean, brevity penalty), scaled to
// 0..100. Tokens are tokenizer surfaces, so casing and punctuation count.
// Unsmoothed, any zero precision zeroes the score.
double corpus_bleu(const std::vector<std::string>& hypotheses,
                   const std::vector<std::string>& references,
                   BleuOptions options = {});

// Micro-averaged word error rate in percent: total edit operations over total
// reference tokens, across the whole corpus.
double corpus_wer(const std::vector<std::string>& hypotheses,
                  const std::vector<std::string>& references);

enum class EditOp { match, substitution, deletion, insertion };

inline constexpr std::size_t kNoPos = std::numeric_limits<std::size_t>::max();

struct AlignedEdit {
  EditOp op = EditOp::match;
  std::size_t ref_pos = kNoPos;  // kNoPos for insertions
  std::size_t hyp_pos = kNoPos;  // kNoPos for deletions
};

// Minimal token-level edit script, canonical under the tie-break
// match > substitution > deletion > insertion, so identical inputs always
// produce the identical script.
std::vector<AlignedEdit> edit_script(const std::vector<std::string>& ref_tokens,
                                     const std::vector<std::string>& hyp_tokens);

enum class MistakeClass { pronoun, verb, whitespace_symbol, other };

struct MistakeCounts {
  std::uint64_t pronoun = 0;
  std::uint64_t verb = 0;
  std::uint64_t whitespace_symbol = 0;
  std::uint64_t other = 0;
  std::uint64_t total() const {
    return pronoun + verb + whitespace_symbol + other;
  }
};

// Buckets each edit between hypothesis and reference. A mismatch run whose
// reference and hypothesis concatenations are equal is pure re-spacing and
// counts as whitespace_symbol outright (the words survived, only spacing
// changed); symbol/emoji tokens land there too. Everything else classifies
// per token with priority pronoun (gendered or singular-they forms) over
// verb (any known verb form) over other. Substitutions and deletions judge
// the reference token, insertions the hypothesis token.
MistakeCounts classify_mistakes(const std::string& reference,
                                const std::string& hypothesis,
                                const Lexicon& lex, const VerbLexicon& vlex);

struct EvalRecord {
  std::string hypothesis;
  std::string reference;
  GenderScan gender = GenderScan::none;  // gender of the original source
  std::string domain;                    // free-form tag; may be empty
};

struct GroupStats {
  std::uint64_t sentences = 0;
  double bleu = 0.0;
  double wer = 0.0;
};

struct EvalReport {
  std::uint64_t sentences = 0;
  double bleu = 0.0;
  double wer = 0.0;
  BleuOptions bleu_options;
  GroupStats masculine;
  GroupStats feminine;
  std::map<std::string, GroupStats> per_domain;
  MistakeCounts mistakes;
  bool balance_warning = false;  // gender counts differ by more than 10%
  std::string balance_note;
};

EvalReport evaluate(const std::vector<EvalRecord>& records, const Lexicon& lex,
                    const VerbLexicon& vlex, BleuOptions options = {});

std::string report_json(const EvalReport& report);  // pretty-printed

// Gold line: source<TAB>reference<TAB>gender<TAB>domain, fields escaped like
// the pairs format; gender is "masculine"/"m" or "feminine"/"f".
struct GoldRecord {
  std::string source;
  std::string reference;
  GenderScan gender = GenderScan::none;
  std::string domain;
};

std::vector<GoldRecord> read_gold_tsv(std::istream& in);

const char* to_string(MistakeClass c);
const char* to_string(EditOp op);

}  // namespace gnrw
