#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gnrw {

struct VerbEntry {
  std::string base;            // plural/present form used with "they"
  std::string third_singular;  // -s form used with "he"/"she"
  std::string past;
};

// Table of known verb forms for agreement detection and mistake tagging.
// The copula and negated auxiliary contractions are recognized in code, not
// stored as rows (their 3sg->plural mapping is suppletive, see morph).
class VerbLexicon {
 public:
  bool is_base(std::string_view lower) const { return bases_.count(key(lower)) > 0; }
  bool is_third_singular(std::string_view lower) const {
    return thirds_.count(key(lower)) > 0;
  }
  bool is_past(std::string_view lower) const { return pasts_.count(key(lower)) > 0; }

  // base|3sg|past rows plus auxiliaries, modals, copula forms and their
  // negated contractions; used for "is this token verb-like" questions.
  bool is_known_verb_form(std::string_view lower) const;

  const std::vector<VerbEntry>& entries() const { return entries_; }
  void add(VerbEntry entry);  // validates non-empty fields, 3sg ends in s

 private:
  static std::string key(std::string_view s) { return std::string(s); }
  std::vector<VerbEntry> entries_;
  std::unordered_set<std::string> bases_, thirds_, pasts_;
};

// ~700 common verbs compiled into the library.
const VerbLexicon& builtin_verb_lexicon();

// Parses "base,third_singular,past" lines; '#' starts a comment. Errors carry
// 1-based line numbers.
VerbLexicon load_verb_lexicon(std::istream& in);
VerbLexicon load_verb_lexicon(const std::filesystem::path& path);

}  // namespace gnrw
