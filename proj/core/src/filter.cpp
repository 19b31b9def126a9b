#include "gnrw/filter.hpp"

#include <stdexcept>
#include <string>

namespace gnrw {

GenderScan detect_gender(const TokenizedSentence& sentence, const Lexicon& lex) {
  bool masc = false, fem = false;
  for (const Token& t : sentence.tokens) {
    if (t.kind != TokenKind::word && t.kind != TokenKind::contraction) continue;
    masc = masc || lex.masculine_pronouns().count(t.lower) > 0;
    fem = fem || lex.feminine_pronouns().count(t.lower) > 0;
  }
  if (masc && fem) return GenderScan::mixed;
  if (masc) return GenderScan::masculine;
  if (fem) return GenderScan::feminine;
  return GenderScan::none;
}

GenderScan detect_gender(std::string_view text, const Lexicon& lex) {
  return detect_gender(tokenize(text), lex);
}

FilterStats filter_corpus(std::istream& in, const Lexicon& lex,
                          std::ostream& gendered, std::ostream& neutral) {
  FilterStats stats;
  std::string line;
  while (std::getline(in, line)) {
    ++stats.total;
    switch (detect_gender(line, lex)) {
      case GenderScan::masculine:
        ++stats.kept_masculine;
        gendered << line << '\n';
        break;
      case GenderScan::feminine:
        ++stats.kept_feminine;
        gendered << line << '\n';
        break;
      case GenderScan::mixed:
        ++stats.dropped_mixed;
        break;
      case GenderScan::none:
        ++stats.dropped_neutral;
        neutral << line << '\n';
        break;
    }
    if (gendered.bad() || neutral.bad())
      throw std::runtime_error("filter: write failed at input line " +
                               std::to_string(stats.total));
  }
  if (in.bad())
    throw std::runtime_error("filter: read failed after line " +
                             std::to_string(stats.total));
  return stats;
}

const char* to_string(GenderScan g) {
  switch (g) {
    case GenderScan::masculine: return "masculine";
    case GenderScan::feminine: return "feminine";
    case GenderScan::none: return "none";
    case GenderScan::mixed: return "mixed";
  }
  return "none";
}

}  // namespace gnrw
