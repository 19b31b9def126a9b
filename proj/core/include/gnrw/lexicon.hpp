#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gnrw {

enum class GenderClass { masculine, feminine, neutral, none };

enum class LexRole {
  subject_pronoun,
  object_pronoun,
  poss_determiner,
  poss_pronoun,
  reflexive,
  contraction,
  noun,
};

// Maps one gendered surface form to its neutral alternatives, in preference
// order (ties in model ranking fall back to the earlier alternative).
struct LexiconEntry {
  std::string source;                     // lowercase gendered form
  std::vector<std::string> alternatives;  // lowercase; nouns may be multi-word
  LexRole role = LexRole::noun;
  bool ambiguous = false;                 // alternatives.size() > 1
};

enum class ReflexiveStyle { themselves, themself };

class Lexicon {
 public:
  // nullptr when token_lower has no gendered reading. Neutral words (they,
  // them, their, ...) are never keys.
  const LexiconEntry* lookup(std::string_view token_lower) const;

  // Adds or replaces an entry. Throws std::invalid_argument for neutral-word
  // sources, empty alternatives, or changes to the alternative sets of the
  // four core ambiguous entries (his, her, he's, she's).
  void add(LexiconEntry entry);

  const std::unordered_set<std::string>& masculine_pronouns() const {
    return masculine_;
  }
  const std::unordered_set<std::string>& feminine_pronouns() const {
    return feminine_;
  }
  static const std::unordered_set<std::string>& neutral_words();

  std::size_t size() const { return entries_.size(); }
  std::vector<const LexiconEntry*> entries() const;

 private:
  friend Lexicon builtin_lexicon(ReflexiveStyle);
  std::unordered_map<std::string, LexiconEntry> entries_;
  std::unordered_set<std::string> masculine_;  // pronoun/contraction forms
  std::unordered_set<std::string> feminine_;
};

// The built-in table: personal pronoun paradigms (with his/her/he's/she's
// ambiguity), negated-contraction forms, and the fixed gendered-noun list.
Lexicon builtin_lexicon(ReflexiveStyle style = ReflexiveStyle::themselves);

// Extends `base` with rows of the form
//   source -> alt1 | alt2 , role
// ('#' starts a comment). Parse errors carry 1-based line numbers.
Lexicon load_lexicon(std::istream& in, Lexicon base);
Lexicon load_lexicon(const std::filesystem::path& path, Lexicon base);

// masculine/feminine if the (lowercased) word is a gendered pronoun or
// contraction, neutral for singular-they forms, none otherwise. Gendered
// nouns deliberately do not count.
GenderClass word_gender_class(std::string_view lower);

LexRole role_from_string(std::string_view name);  // throws on unknown name
const char* to_string(LexRole role);
const char* to_string(GenderClass g);

}  // namespace gnrw
