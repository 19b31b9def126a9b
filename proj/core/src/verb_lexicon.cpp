#include "gnrw/verb_lexicon.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gnrw {
namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Auxiliaries, modals and contracted negations that behave like finite verbs
// for clause analysis but are not base/3sg/past rows.
const std::unordered_set<std::string>& aux_forms() {
  static const std::unordered_set<std::string> kAux = {
      "is",      "are",     "was",      "were",     "be",       "been",
      "being",   "am",      "isn't",    "aren't",   "wasn't",   "weren't",
      "do",      "does",    "did",      "don't",    "doesn't",  "didn't",
      "have",    "has",     "had",      "hasn't",   "haven't",  "hadn't",
      "can",     "can't",   "cannot",   "could",    "couldn't", "will",
      "won't",   "would",   "wouldn't", "shall",    "should",   "shouldn't",
      "may",     "might",   "mightn't", "must",     "mustn't",
      "done",    "doing",   "ain't",
  };
  return kAux;
}

}  // namespace

void VerbLexicon::add(VerbEntry entry) {
  if (entry.base.empty() || entry.third_singular.empty() || entry.past.empty())
    throw std::invalid_argument("verb entry has empty field");
  if (entry.third_singular.back() != 's')
    throw std::invalid_argument("third-singular form must end in 's': " +
                                entry.third_singular);
  bases_.insert(entry.base);
  thirds_.insert(entry.third_singular);
  pasts_.insert(entry.past);
  entries_.push_back(std::move(entry));
}

bool VerbLexicon::is_known_verb_form(std::string_view lower) const {
  std::string k = key(lower);
  if (bases_.count(k) || thirds_.count(k) || pasts_.count(k)) return true;
  return aux_forms().count(k) > 0;
}

VerbLexicon load_verb_lexicon(std::istream& in) {
  VerbLexicon vlex;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    if (size_t hash = sv.find('#'); hash != std::string_view::npos)
      sv = sv.substr(0, hash);
    std::string text = trim(sv);
    if (text.empty()) continue;
    size_t c1 = text.find(',');
    size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(',', c1 + 1);
    if (c2 == std::string::npos)
      throw std::runtime_error("verb lexicon line " + std::to_string(lineno) +
                               ": expected base,third_singular,past");
    VerbEntry e;
    e.base = trim(text.substr(0, c1));
    e.third_singular = trim(text.substr(c1 + 1, c2 - c1 - 1));
    e.past = trim(text.substr(c2 + 1));
    try {
      vlex.add(std::move(e));
    } catch (const std::invalid_argument& ex) {
      throw std::runtime_error("verb lexicon line " + std::to_string(lineno) +
                               ": " + ex.what());
    }
  }
  if (in.bad()) throw std::runtime_error("verb lexicon: read error");
  return vlex;
}

VerbLexicon load_verb_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open verb lexicon: " + path.string());
  return load_verb_lexicon(in);
}

const VerbLexicon& builtin_verb_lexicon() {
  extern const char* kBuiltinVerbTable;
  static const VerbLexicon vlex = [] {
    std::istringstream in(kBuiltinVerbTable);
    return load_verb_lexicon(in);
  }();
  return vlex;
}

}  // namespace gnrw
