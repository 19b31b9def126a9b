#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gnrw/token.hpp"
#include "gnrw/verb_lexicon.hpp"

namespace gnrw {

// True for verb forms that agree with a third-person-singular subject and
// therefore need repair when that subject becomes "they": is/was/has/does/goes,
// their negated contractions, listed -s forms, and -s forms whose base is a
// known verb (tries ies->y, -es, -s in that order).
bool is_finite_3sg(std::string_view lower, const VerbLexicon& vlex);

// Indices of verbs governed by the subject pronoun at pronoun_index, found by
// shallow clause-local scanning:
//   - subject-auxiliary inversion: "Does she ..." links the auxiliary before
//     the pronoun;
//   - first verb after the pronoun inside the clause becomes the anchor and is
//     linked when third-singular;
//   - coordination chains extend from the anchor ("sings, dances and laughs")
//     but stop dead at the first coordinator not followed by a verb, so
//     "She sings and Bob dances" never links "dances".
// Clauses are delimited by sentence punctuation, subordinators and wh-words;
// a comma only stops the initial scan when what follows it (skipping commas
// and adverbs) is not a verb.
// Returned indices are sorted and unique; only third-singular forms appear.
std::vector<std::size_t> find_agreeing_verbs(const TokenizedSentence& sentence,
                                             std::size_t pronoun_index,
                                             const VerbLexicon& vlex);

}  // namespace gnrw
