#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string_view>

#include "gnrw/lexicon.hpp"
#include "gnrw/token.hpp"

namespace gnrw {

// Sentence-level scan outcome. `mixed` means both pronoun sets matched.
enum class GenderScan { masculine, feminine, none, mixed };

struct FilterStats {
  std::uint64_t total = 0;
  std::uint64_t kept_masculine = 0;
  std::uint64_t kept_feminine = 0;
  std::uint64_t dropped_mixed = 0;
  std::uint64_t dropped_neutral = 0;
};

// Word-boundary, case-insensitive pronoun scan. Gendered nouns (fireman, ...)
// never influence the result; URLs/emoji are opaque.
GenderScan detect_gender(const TokenizedSentence& sentence, const Lexicon& lex);
GenderScan detect_gender(std::string_view text, const Lexicon& lex);

// Splits a line stream: single-gender lines to `gendered`, pronoun-free lines
// to `neutral`, mixed lines dropped. Order is preserved within each stream.
// I/O failures throw with the 1-based line number reached.
FilterStats filter_corpus(std::istream& in, const Lexicon& lex,
                          std::ostream& gendered, std::ostream& neutral);

const char* to_string(GenderScan g);

}  // namespace gnrw
