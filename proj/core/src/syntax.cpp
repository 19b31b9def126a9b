#include "gnrw/syntax.hpp"

#include <algorithm>
#include <unordered_set>

namespace gnrw {
namespace {

using Set = std::unordered_set<std::string_view>;

const Set kInversionAux = {"does", "is", "has", "was",
                           "doesn't", "isn't", "hasn't", "wasn't"};
const Set kIrregular3sg = {"is", "was", "has", "does", "goes",
                           "isn't", "wasn't", "hasn't", "doesn't"};
const Set kSubordinators = {
    "that", "because", "if",     "when",  "while",   "although", "since",
    "unless", "until",  "after", "before", "though", "whereas",  "where",
    "why",  "how",    "who",    "whom",  "whose",   "which",    "what"};
const Set kCoordinators = {"and", "or"};
const Set kAdverbs = {
    "then",      "often",     "never",       "always",    "also",
    "still",     "just",      "now",         "sometimes", "usually",
    "really",    "even",      "however",     "quickly",   "slowly",
    "carefully", "rarely",    "frequently",  "later",     "soon",
    "today",     "yesterday", "tomorrow",    "certainly", "probably",
    "definitely", "maybe",    "perhaps",     "again",     "once",
    "twice",     "finally",   "eventually",  "immediately", "suddenly",
    "quietly",   "loudly",    "gently",      "clearly",   "simply",
    "truly",     "happily",   "sadly",       "already"};

bool is_wordlike(const Token& t) {
  return t.kind == TokenKind::word || t.kind == TokenKind::contraction;
}

bool is_sentence_break(const Token& t) {
  if (t.kind != TokenKind::punctuation || t.surface.empty()) return false;
  char c = t.surface[0];
  return c == '.' || c == '!' || c == '?' || c == ';' || c == ':';
}

bool is_comma(const Token& t) {
  return t.kind == TokenKind::punctuation && !t.surface.empty() &&
         t.surface[0] == ',';
}

bool is_coordinator(const Token& t) {
  if (is_comma(t)) return true;
  return is_wordlike(t) && kCoordinators.count(t.lower) > 0;
}

bool is_verb_like(const Token& t, const VerbLexicon& vlex) {
  return is_wordlike(t) && vlex.is_known_verb_form(t.lower);
}

bool is_adverb(const Token& t) {
  return is_wordlike(t) && kAdverbs.count(t.lower) > 0;
}

bool is_subordinator(const Token& t) {
  return is_wordlike(t) && kSubordinators.count(t.lower) > 0;
}

// First index at or after i that is not a comma, coordinator or adverb.
std::size_t skip_connectives(const std::vector<Token>& toks, std::size_t i) {
  while (i < toks.size() &&
         (is_comma(toks[i]) || is_adverb(toks[i]) ||
          (is_wordlike(toks[i]) && kCoordinators.count(toks[i].lower) > 0)))
    ++i;
  return i;
}

}  // namespace

bool is_finite_3sg(std::string_view lower, const VerbLexicon& vlex) {
  if (kIrregular3sg.count(lower)) return true;
  if (vlex.is_third_singular(lower)) return true;
  if (lower.size() < 2 || lower.back() != 's') return false;
  auto known = [&](std::string base) { return vlex.is_base(base); };
  std::string s(lower);
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  };
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "ies") == 0 &&
      !is_vowel(s[s.size() - 4]) && known(s.substr(0, s.size() - 3) + "y"))
    return true;
  if (s.size() > 2 && s[s.size() - 2] == 'e' && known(s.substr(0, s.size() - 2)))
    return true;
  return known(s.substr(0, s.size() - 1));
}

std::vector<std::size_t> find_agreeing_verbs(const TokenizedSentence& sentence,
                                             std::size_t pronoun_index,
                                             const VerbLexicon& vlex) {
  const auto& toks = sentence.tokens;
  std::vector<std::size_t> links;
  if (pronoun_index >= toks.size()) return links;

  // Subject-auxiliary inversion: "Does she ...", "Is he ...".
  if (pronoun_index > 0) {
    const Token& prev = toks[pronoun_index - 1];
    if (is_wordlike(prev) && kInversionAux.count(prev.lower))
      links.push_back(pronoun_index - 1);
  }

  // Scan forward to the first verb in the clause; it anchors coordination.
  std::size_t anchor = toks.size();
  for (std::size_t i = pronoun_index + 1; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (is_sentence_break(t)) break;
    if (is_comma(t)) {
      // "She, however, walks ..." keeps scanning; appositions stop it.
      std::size_t next = skip_connectives(toks, i + 1);
      if (next < toks.size() && is_verb_like(toks[next], vlex)) continue;
      break;
    }
    if (is_subordinator(t)) break;
    // A bare coordinator before any verb starts a new clause ("is she happy
    // and does she dance"); compound subjects take plural verbs anyway.
    if (is_wordlike(t) && kCoordinators.count(t.lower)) break;
    if (is_verb_like(t, vlex)) {
      anchor = i;
      if (is_finite_3sg(t.lower, vlex)) links.push_back(i);
      break;
    }
  }

  // Extend across coordinated verbs: "walks and talks", "sings, dances".
  if (anchor < toks.size()) {
    std::size_t i = anchor + 1;
    while (i < toks.size()) {
      const Token& t = toks[i];
      if (is_sentence_break(t) || is_subordinator(t)) break;
      if (is_coordinator(t)) {
        std::size_t next = skip_connectives(toks, i + 1);
        if (next < toks.size() && is_verb_like(toks[next], vlex)) {
          if (is_finite_3sg(toks[next].lower, vlex)) links.push_back(next);
          anchor = next;
          i = next + 1;
          continue;
        }
        break;  // coordinated non-verb means a new subject takes over
      }
      ++i;
    }
  }

  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  return links;
}

}  // namespace gnrw
