#include "gnrw/morph.hpp"

#include <stdexcept>
#include <unordered_map>

#include "gnrw/token.hpp"

namespace gnrw {
namespace {

const std::unordered_map<std::string, std::string>& suppletive_plural() {
  static const std::unordered_map<std::string, std::string> kMap = {
      {"is", "are"},       {"was", "were"},       {"has", "have"},
      {"does", "do"},      {"goes", "go"},        {"isn't", "aren't"},
      {"wasn't", "weren't"}, {"hasn't", "haven't"}, {"doesn't", "don't"},
  };
  return kMap;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string pluralize_verb(std::string_view third_singular) {
  std::string lower = fold_case(third_singular);
  if (auto it = suppletive_plural().find(lower); it != suppletive_plural().end())
    return match_case(third_singular, it->second);
  // Words no rule covers are fixed points: plural bases ("grow"), modals,
  // past forms, and ss-final words ("miss") pass through unchanged.
  if (lower.size() < 2 || lower.back() != 's')
    return std::string(third_singular);
  std::string base;
  // Four-letter -ies words (ties, dies, lies) are -ie bases plus bare "s" and
  // fall through to the drop-s rule; the y-alternation needs a longer stem.
  if (ends_with(lower, "ies") && lower.size() > 4 && !is_vowel(lower[lower.size() - 4])) {
    base = lower.substr(0, lower.size() - 3) + "y";  // carries -> carry
  } else if (ends_with(lower, "ches") || ends_with(lower, "shes") ||
             ends_with(lower, "sses") || ends_with(lower, "xes") ||
             ends_with(lower, "zes") || ends_with(lower, "oes")) {
    base = lower.substr(0, lower.size() - 2);  // watches -> watch
  } else if (lower[lower.size() - 2] != 's') {
    base = lower.substr(0, lower.size() - 1);  // runs -> run
  } else {
    return std::string(third_singular);
  }
  return match_case(third_singular, base);
}

std::vector<std::string> inflect_pronoun(std::string_view token, GenderClass target) {
  using Map = std::unordered_map<std::string, std::vector<std::string>>;
  static const Map kToMasc = {
      {"she", {"he"}},         {"her", {"him", "his"}}, {"hers", {"his"}},
      {"herself", {"himself"}}, {"she's", {"he's"}},     {"she'll", {"he'll"}},
      {"she'd", {"he'd"}},
  };
  static const Map kToFem = {
      {"he", {"she"}},          {"him", {"her"}},        {"his", {"her", "hers"}},
      {"himself", {"herself"}}, {"he's", {"she's"}},     {"he'll", {"she'll"}},
      {"he'd", {"she'd"}},
  };
  const Map* map = nullptr;
  if (target == GenderClass::masculine) map = &kToMasc;
  else if (target == GenderClass::feminine) map = &kToFem;
  else
    throw std::invalid_argument("inflection target must be masculine or feminine");
  std::string lower = fold_case(token);
  auto it = map->find(lower);
  if (it == map->end())
    throw std::invalid_argument("cannot inflect '" + std::string(token) +
                                "' to " + to_string(target));
  std::vector<std::string> out;
  out.reserve(it->second.size());
  for (const auto& alt : it->second) out.push_back(match_case(token, alt));
  return out;
}

}  // namespace gnrw
