#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gnrw/lexicon.hpp"
#include "gnrw/verb_lexicon.hpp"

namespace gnrw {

// Third-singular -> plural (base) verb form, preserving the letter case of
// the input ("Goes" -> "Go", "DOES" -> "DO"). Suppletive forms (is/was/has/
// does/goes and their negated contractions) are mapped by table; everything
// else by suffix rules:
//   consonant+ies -> y   (carries -> carry)
//   ches/shes/sses/xes/zes/oes -> drop "es"  (watches -> watch)
//   otherwise drop final "s"  (runs -> run)
// Words no rule covers (no final "s", or "ss"-final like "miss") come back
// unchanged, so plural bases are fixed points and the call never fails.
std::string pluralize_verb(std::string_view third_singular);

// Swaps the gender of a single pronoun or pronoun contraction, preserving
// case. Some forms are one-to-many ("his" -> her|hers); callers pick by role.
// Throws std::invalid_argument for tokens that are not gendered pronouns or
// already have the requested gender.
std::vector<std::string> inflect_pronoun(std::string_view token, GenderClass target);

}  // namespace gnrw
