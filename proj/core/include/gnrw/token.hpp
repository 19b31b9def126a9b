#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gnrw {

enum class TokenKind { word, contraction, punctuation, number, symbol, url, emoji };

// One surface token plus the whitespace that followed it, kept verbatim so the
// original line can be reassembled byte-for-byte.
struct Token {
  std::string surface;
  std::string lower;        // ASCII-casefolded surface, U+2019 folded to '
  std::string trailing_ws;  // exact whitespace run after the token ("" if none)
  TokenKind kind = TokenKind::word;
};

struct TokenizedSentence {
  std::string source_text;
  std::string leading_ws;  // whitespace before the first token, usually ""
  std::vector<Token> tokens;
};

// Splits text into tokens without losing a byte:
//   leading_ws + sum(surface + trailing_ws) == source_text.
// Contractions (don't, she's) are single tokens; URLs (scheme:// or www.) and
// emoji runs are opaque single tokens. Invalid UTF-8 bytes become symbol
// tokens rather than an error.
TokenizedSentence tokenize(std::string_view text);

// Reassembles the sentence. Equals source_text if no surface was edited.
// Multi-word replacement surfaces keep their internal single spaces and the
// token's original trailing whitespace.
std::string detokenize(const TokenizedSentence& sentence);

// Projects the casing of `tmpl` onto `word`: ALL-CAPS templates (two or more
// letters, none lowercase) uppercase the result, templates starting with an
// uppercase letter title-case it, anything else leaves `word` untouched.
std::string match_case(std::string_view tmpl, std::string_view word);

// ASCII case-fold plus U+2019 -> ' so curly-apostrophe contractions hit the
// same lexicon keys as straight-quoted ones.
std::string fold_case(std::string_view word);

const char* to_string(TokenKind kind);

}  // namespace gnrw
