#include "gnrw/lexicon.hpp"

namespace gnrw {

Lexicon builtin_lexicon(ReflexiveStyle style) {
  Lexicon lex;
  const std::string refl =
      style == ReflexiveStyle::themselves ? "themselves" : "themself";

  auto add = [&lex](std::string src, std::vector<std::string> alts, LexRole role) {
    LexiconEntry e;
    e.source = std::move(src);
    e.alternatives = std::move(alts);
    e.role = role;
    lex.add(std::move(e));
  };

  add("he", {"they"}, LexRole::subject_pronoun);
  add("she", {"they"}, LexRole::subject_pronoun);
  add("him", {"them"}, LexRole::object_pronoun);
  add("his", {"their", "theirs"}, LexRole::poss_determiner);
  add("her", {"their", "them"}, LexRole::object_pronoun);
  add("hers", {"theirs"}, LexRole::poss_pronoun);
  add("himself", {refl}, LexRole::reflexive);
  add("herself", {refl}, LexRole::reflexive);
  add("he's", {"they're", "they've"}, LexRole::contraction);
  add("she's", {"they're", "they've"}, LexRole::contraction);
  add("he'll", {"they'll"}, LexRole::contraction);
  add("she'll", {"they'll"}, LexRole::contraction);
  add("he'd", {"they'd"}, LexRole::contraction);
  add("she'd", {"they'd"}, LexRole::contraction);

  // fixed gendered-noun mappings; replacements are ordinary neutral nouns
  add("mankind", {"humanity"}, LexRole::noun);
  add("layman", {"layperson"}, LexRole::noun);
  add("laymen", {"lay people"}, LexRole::noun);
  add("policeman", {"police officer"}, LexRole::noun);
  add("policewoman", {"police officer"}, LexRole::noun);
  add("policemen", {"police officers"}, LexRole::noun);
  add("policewomen", {"police officers"}, LexRole::noun);
  add("stewardess", {"flight attendant"}, LexRole::noun);
  add("weatherman", {"weather reporter"}, LexRole::noun);
  add("fireman", {"firefighter"}, LexRole::noun);
  add("chairman", {"chair"}, LexRole::noun);
  add("spokesman", {"spokesperson"}, LexRole::noun);

  lex.masculine_ = {"he", "him", "his", "himself", "he's", "he'll", "he'd"};
  lex.feminine_ = {"she", "her", "hers", "herself", "she's", "she'll", "she'd"};
  return lex;
}

}  // namespace gnrw
