#include "gnrw/lexicon.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gnrw/token.hpp"

namespace gnrw {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

// collapse internal whitespace runs of multi-word alternatives to one space
std::string normalize_alt(std::string_view s) {
  std::string out;
  bool in_ws = false;
  for (char c : trim(s)) {
    if (c == ' ' || c == '\t') {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out += ' ';
    in_ws = false;
    out += c;
  }
  return out;
}

const std::unordered_set<std::string> kNeutral = {
    "they", "them",       "their",    "theirs",  "themselves",
    "themself", "they're", "they've", "they'll", "they'd",
};

// the paper-fixed alternative sets that extensions may not alter
const std::unordered_map<std::string, std::vector<std::string>> kPinned = {
    {"his", {"their", "theirs"}},
    {"her", {"their", "them"}},
    {"he's", {"they're", "they've"}},
    {"she's", {"they're", "they've"}},
};

bool is_pronounish(LexRole r) { return r != LexRole::noun; }

}  // namespace

const std::unordered_set<std::string>& Lexicon::neutral_words() {
  return kNeutral;
}

const LexiconEntry* Lexicon::lookup(std::string_view token_lower) const {
  auto it = entries_.find(std::string(token_lower));
  return it == entries_.end() ? nullptr : &it->second;
}

void Lexicon::add(LexiconEntry entry) {
  if (entry.source.empty())
    throw std::invalid_argument("lexicon entry with empty source");
  if (kNeutral.count(entry.source))
    throw std::invalid_argument("lexicon entry would rewrite neutral word '" +
                                entry.source + "'");
  if (entry.alternatives.empty())
    throw std::invalid_argument("lexicon entry '" + entry.source +
                                "' has no alternatives");
  for (const auto& a : entry.alternatives)
    if (a.empty())
      throw std::invalid_argument("lexicon entry '" + entry.source +
                                  "' has an empty alternative");
  auto pinned = kPinned.find(entry.source);
  if (pinned != kPinned.end() && entry.alternatives != pinned->second)
    throw std::invalid_argument(
        "lexicon entry '" + entry.source +
        "' must keep its fixed alternative set (their/theirs, their/them, "
        "they're/they've)");
  entry.ambiguous = entry.alternatives.size() > 1;
  entries_[entry.source] = std::move(entry);
}

std::vector<const LexiconEntry*> Lexicon::entries() const {
  std::vector<const LexiconEntry*> out;
  out.reserve(entries_.size());
  for (const auto& [_, e] : entries_) out.push_back(&e);
  return out;
}

Lexicon load_lexicon(std::istream& in, Lexicon base) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    auto arrow = body.find("->");
    if (arrow == std::string::npos)
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": missing '->'");
    std::string source = fold_case(trim(body.substr(0, arrow)));
    std::string rhs = body.substr(arrow + 2);
    auto comma = rhs.rfind(',');
    if (comma == std::string::npos)
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": missing ',role'");
    std::string role_name = trim(rhs.substr(comma + 1));
    std::string alts = rhs.substr(0, comma);
    LexiconEntry e;
    e.source = source;
    std::size_t pos = 0;
    while (pos <= alts.size()) {
      auto bar = alts.find('|', pos);
      std::string alt = normalize_alt(
          bar == std::string::npos ? alts.substr(pos) : alts.substr(pos, bar - pos));
      if (!alt.empty()) e.alternatives.push_back(fold_case(alt));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    try {
      e.role = role_from_string(role_name);
      base.add(std::move(e));
    } catch (const std::exception& ex) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": " + ex.what());
    }
  }
  if (in.bad()) throw std::runtime_error("lexicon read failed");
  return base;
}

Lexicon load_lexicon(const std::filesystem::path& path, Lexicon base) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open lexicon file: " + path.string());
  return load_lexicon(in, std::move(base));
}

GenderClass word_gender_class(std::string_view lower) {
  static const std::unordered_set<std::string> masc = {
      "he", "him", "his", "himself", "he's", "he'll", "he'd"};
  static const std::unordered_set<std::string> fem = {
      "she", "her", "hers", "herself", "she's", "she'll", "she'd"};
  std::string key(lower);
  if (masc.count(key)) return GenderClass::masculine;
  if (fem.count(key)) return GenderClass::feminine;
  if (kNeutral.count(key)) return GenderClass::neutral;
  return GenderClass::none;
}

LexRole role_from_string(std::string_view name) {
  std::string n = trim(name);
  if (n == "subject_pronoun") return LexRole::subject_pronoun;
  if (n == "object_pronoun") return LexRole::object_pronoun;
  if (n == "poss_determiner") return LexRole::poss_determiner;
  if (n == "poss_pronoun") return LexRole::poss_pronoun;
  if (n == "reflexive") return LexRole::reflexive;
  if (n == "contraction") return LexRole::contraction;
  if (n == "noun") return LexRole::noun;
  throw std::invalid_argument("unknown lexicon role '" + n + "'");
}

const char* to_string(LexRole role) {
  switch (role) {
    case LexRole::subject_pronoun: return "subject_pronoun";
    case LexRole::object_pronoun: return "object_pronoun";
    case LexRole::poss_determiner: return "poss_determiner";
    case LexRole::poss_pronoun: return "poss_pronoun";
    case LexRole::reflexive: return "reflexive";
    case LexRole::contraction: return "contraction";
    case LexRole::noun: return "noun";
  }
  return "noun";
}

const char* to_string(GenderClass g) {
  switch (g) {
    case GenderClass::masculine: return "masculine";
    case GenderClass::feminine: return "feminine";
    case GenderClass::neutral: return "neutral";
    case GenderClass::none: return "none";
  }
  return "none";
}

}  // namespace gnrw
