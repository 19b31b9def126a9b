#include "gnrw/token.hpp"

#include <array>
#include <cctype>

namespace gnrw {
namespace {

struct Cp {
  char32_t value;
  int width;  // bytes consumed; 0 means invalid byte treated as-is
};

Cp decode(std::string_view s, std::size_t i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t v = (b0 & 0x1Fu) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
    return {v, 2};
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t v = (b0 & 0x0Fu) << 12 |
                 (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                 (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
    return {v, 3};
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t v = (b0 & 0x07u) << 18 |
                 (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                 (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                 (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
    return {v, 4};
  }
  return {b0, 0};  // stray byte
}

bool is_ws(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000: case 0x200B:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }
bool is_ascii_alpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

bool is_emoji_core(char32_t c) {
  return (c >= 0x1F000 && c <= 0x1FAFF) || (c >= 0x2600 && c <= 0x27BF) ||
         (c >= 0x2B00 && c <= 0x2BFF) || c == 0x231A || c == 0x231B ||
         (c >= 0x23E9 && c <= 0x23FA) || c == 0x2B50 || c == 0x2B55;
}
// joiners/modifiers that may continue an emoji run but not start one
bool is_emoji_cont(char32_t c) {
  return c == 0x200D || c == 0xFE0F || c == 0x20E3;
}

bool is_punct_cp(char32_t c) {
  switch (c) {
    case U'.': case U',': case U'!': case U'?': case U';': case U':':
    case U'\'': case U'"': case U'(': case U')': case U'[': case U']':
    case U'{': case U'}': case U'`': case U'-':
    case 0x00A1: case 0x00BF: case 0x00AB: case 0x00BB:
    case 0x2026: case 0x2013: case 0x2014: case 0x2032: case 0x2033:
      return true;
    default:
      return (c >= 0x2018 && c <= 0x201F);
  }
}

bool is_symbol_cp(char32_t c) {
  if (c < 0x80) return !is_ascii_alpha(c) && !is_ascii_digit(c);
  return (c >= 0x20A0 && c <= 0x20CF) ||                    // currency
         (c >= 0x2190 && c <= 0x23FF && !is_emoji_core(c) && c != 0x231A &&
          c != 0x231B && !(c >= 0x23E9 && c <= 0x23FA)) ||  // arrows, technical
         (c >= 0x2200 && c <= 0x22FF) ||                    // math
         (c >= 0x2100 && c <= 0x214F) ||                    // letterlike (™, №)
         (c >= 0x00A2 && c <= 0x00A9) || c == 0x00AC || c == 0x00AE ||
         c == 0x00B0 || c == 0x00B1 || c == 0x00B6 ||
         (c >= 0x25A0 && c <= 0x25FF);                      // geometric shapes
}

// Everything not otherwise classified is a word character; this keeps
// accented and non-Latin words whole without a full Unicode table.
bool is_word_cp(char32_t c) {
  if (c < 0x80) return is_ascii_alpha(c) || is_ascii_digit(c);
  return !is_ws(c) && !is_punct_cp(c) && !is_symbol_cp(c) &&
         !is_emoji_core(c) && !is_emoji_cont(c);
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

// true if the byte window starting at i looks like a URL: scheme:// or www.
bool starts_url(std::string_view s, std::size_t i) {
  std::size_t j = i;
  if (s.size() - i >= 4) {
    char a = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
    if (a == 'w' && s.size() - i >= 5) {
      std::string head;
      for (std::size_t k = 0; k < 4; ++k)
        head += static_cast<char>(std::tolower(static_cast<unsigned char>(s[i + k])));
      if (head == "www." && !is_ws(static_cast<unsigned char>(s[i + 4]))) return true;
    }
  }
  // scheme: [A-Za-z][A-Za-z0-9+.-]{0,15} followed by "://"
  if (!is_ascii_alpha(static_cast<unsigned char>(s[j]))) return false;
  std::size_t k = j + 1;
  while (k < s.size() && k - j <= 16) {
    char c = s[k];
    if (is_ascii_alpha(static_cast<unsigned char>(c)) ||
        is_ascii_digit(static_cast<unsigned char>(c)) || c == '+' || c == '.' ||
        c == '-') {
      ++k;
      continue;
    }
    break;
  }
  return s.compare(k, 3, "://") == 0;
}

const std::array<std::string_view, 5> kClitics = {"s", "re", "ve", "ll", "d"};

}  // namespace

std::string fold_case(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t i = 0;
  while (i < word.size()) {
    Cp cp = decode(word, i);
    std::size_t w = cp.width ? cp.width : 1;
    if (cp.width && cp.value == 0x2019) {
      out += '\'';
    } else if (cp.value < 0x80) {
      out += static_cast<char>(std::tolower(static_cast<int>(cp.value)));
    } else {
      out.append(word.substr(i, w));
    }
    i += w;
  }
  return out;
}

TokenizedSentence tokenize(std::string_view text) {
  TokenizedSentence out;
  out.source_text.assign(text);
  std::size_t i = 0;
  auto take_ws = [&]() {
    std::size_t start = i;
    while (i < text.size()) {
      Cp cp = decode(text, i);
      if (!cp.width || !is_ws(cp.value)) break;
      i += cp.width;
    }
    return std::string(text.substr(start, i - start));
  };
  out.leading_ws = take_ws();
  while (i < text.size()) {
    std::size_t start = i;
    Cp cp = decode(text, i);
    TokenKind kind = TokenKind::symbol;
    if (cp.width == 0) {
      ++i;  // invalid byte, isolated symbol token
    } else if (starts_url(text, i)) {
      kind = TokenKind::url;
      while (i < text.size()) {
        Cp c2 = decode(text, i);
        if (c2.width && is_ws(c2.value)) break;
        i += c2.width ? c2.width : 1;
      }
    } else if (is_ascii_digit(cp.value)) {
      kind = TokenKind::number;
      i += cp.width;
      while (i < text.size()) {
        Cp c2 = decode(text, i);
        if (!c2.width) break;
        if (is_ascii_digit(c2.value)) {
          i += c2.width;
        } else if ((c2.value == U'.' || c2.value == U',' || c2.value == U':') &&
                   i + c2.width < text.size()) {
          Cp c3 = decode(text, i + c2.width);
          if (c3.width && is_ascii_digit(c3.value)) {
            i += c2.width + c3.width;
          } else {
            break;
          }
        } else {
          break;
        }
      }
    } else if (is_emoji_core(cp.value)) {
      kind = TokenKind::emoji;
      i += cp.width;
      while (i < text.size()) {
        Cp c2 = decode(text, i);
        if (!c2.width || (!is_emoji_core(c2.value) && !is_emoji_cont(c2.value)))
          break;
        i += c2.width;
      }
    } else if (is_word_cp(cp.value)) {
      kind = TokenKind::word;
      int apostrophes = 0;
      std::size_t last_apostrophe_end = 0;  // byte offset just past it
      while (i < text.size()) {
        Cp c2 = decode(text, i);
        if (!c2.width) break;
        if (is_word_cp(c2.value)) {
          i += c2.width;
          continue;
        }
        // apostrophe or hyphen glues only when a word char follows
        if ((is_apostrophe(c2.value) || c2.value == U'-') &&
            i + c2.width < text.size()) {
          Cp c3 = decode(text, i + c2.width);
          if (c3.width && is_word_cp(c3.value)) {
            if (is_apostrophe(c2.value)) {
              ++apostrophes;
              last_apostrophe_end = i + c2.width;
            }
            i += c2.width;
            continue;
          }
        }
        break;
      }
      if (apostrophes == 1) {
        std::string tail = fold_case(
            std::string_view(text.substr(last_apostrophe_end, i - last_apostrophe_end)));
        bool clitic = false;
        for (auto c : kClitics) clitic = clitic || tail == c;
        if (tail == "t") {
          // n't: letter before the apostrophe must be n/N
          std::string before = fold_case(std::string_view(
              text.substr(start, last_apostrophe_end - start)));
          if (before.size() >= 2 && before[before.size() - 2] == 'n') clitic = true;
        }
        if (clitic) kind = TokenKind::contraction;
      }
    } else if (is_punct_cp(cp.value)) {
      kind = TokenKind::punctuation;
      char32_t first = cp.value;
      i += cp.width;
      while (i < text.size()) {
        Cp c2 = decode(text, i);
        if (!c2.width || c2.value != first) break;  // runs of the same mark
        i += c2.width;
      }
    } else {
      kind = TokenKind::symbol;
      char32_t first = cp.value;
      i += cp.width;
      while (i < text.size()) {
        Cp c2 = decode(text, i);
        if (!c2.width || c2.value != first) break;
        i += c2.width;
      }
    }
    Token tok;
    tok.surface.assign(text.substr(start, i - start));
    tok.lower = fold_case(tok.surface);
    tok.kind = kind;
    tok.trailing_ws = take_ws();
    out.tokens.push_back(std::move(tok));
  }
  return out;
}

std::string detokenize(const TokenizedSentence& sentence) {
  std::string out = sentence.leading_ws;
  for (const Token& t : sentence.tokens) {
    out += t.surface;
    out += t.trailing_ws;
  }
  return out;
}

std::string match_case(std::string_view tmpl, std::string_view word) {
  int letters = 0, uppers = 0, lowers = 0;
  bool first_upper = false;
  std::size_t i = 0;
  bool first = true;
  while (i < tmpl.size()) {
    Cp cp = decode(tmpl, i);
    std::size_t w = cp.width ? cp.width : 1;
    if (cp.value < 0x80 && is_ascii_alpha(cp.value)) {
      ++letters;
      bool up = std::isupper(static_cast<int>(cp.value)) != 0;
      uppers += up;
      lowers += !up;
      if (first) first_upper = up;
      first = false;
    } else if (first && cp.value >= 0x80) {
      first = false;  // non-ASCII first letter: treat as lowercase template
    }
    i += w;
  }
  if (letters >= 2 && lowers == 0 && uppers == letters) {
    std::string out(word);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
  }
  if (first_upper) {
    std::string out(word);
    if (!out.empty())
      out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
  }
  return std::string(word);
}

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::word: return "word";
    case TokenKind::contraction: return "contraction";
    case TokenKind::punctuation: return "punctuation";
    case TokenKind::number: return "number";
    case TokenKind::symbol: return "symbol";
    case TokenKind::url: return "url";
    case TokenKind::emoji: return "emoji";
  }
  return "word";
}

}  // namespace gnrw
