#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnrw/lexicon.hpp"

using namespace gnrw;

TEST_CASE("builtin lexicon pronoun paradigm") {
  Lexicon lex = builtin_lexicon();

  const LexiconEntry* she = lex.lookup("she");
  REQUIRE(she != nullptr);
  CHECK(she->alternatives == std::vector<std::string>{"they"});
  CHECK(she->role == LexRole::subject_pronoun);
  CHECK_FALSE(she->ambiguous);

  const LexiconEntry* he = lex.lookup("he");
  REQUIRE(he != nullptr);
  CHECK(he->alternatives == std::vector<std::string>{"they"});

  const LexiconEntry* him = lex.lookup("him");
  REQUIRE(him != nullptr);
  CHECK(him->alternatives == std::vector<std::string>{"them"});

  const LexiconEntry* hers = lex.lookup("hers");
  REQUIRE(hers != nullptr);
  CHECK(hers->alternatives == std::vector<std::string>{"theirs"});

  const LexiconEntry* herself = lex.lookup("herself");
  REQUIRE(herself != nullptr);
  CHECK(herself->alternatives == std::vector<std::string>{"themselves"});
  CHECK(herself->role == LexRole::reflexive);
}

TEST_CASE("the four ambiguous entries carry exactly the pinned alternatives") {
  Lexicon lex = builtin_lexicon();

  const LexiconEntry* his = lex.lookup("his");
  REQUIRE(his != nullptr);
  CHECK(his->ambiguous);
  CHECK(his->alternatives == std::vector<std::string>{"their", "theirs"});

  const LexiconEntry* her = lex.lookup("her");
  REQUIRE(her != nullptr);
  CHECK(her->ambiguous);
  CHECK(her->alternatives == std::vector<std::string>{"their", "them"});

  for (const char* c : {"he's", "she's"}) {
    const LexiconEntry* e = lex.lookup(c);
    REQUIRE(e != nullptr);
    CHECK(e->ambiguous);
    CHECK(e->alternatives == std::vector<std::string>{"they're", "they've"});
    CHECK(e->role == LexRole::contraction);
  }
}

TEST_CASE("unambiguous contractions") {
  Lexicon lex = builtin_lexicon();
  for (const char* c : {"he'll", "she'll"}) {
    const LexiconEntry* e = lex.lookup(c);
    REQUIRE(e != nullptr);
    CHECK(e->alternatives == std::vector<std::string>{"they'll"});
  }
  for (const char* c : {"he'd", "she'd"}) {
    const LexiconEntry* e = lex.lookup(c);
    REQUIRE(e != nullptr);
    CHECK(e->alternatives == std::vector<std::string>{"they'd"});
  }
}

TEST_CASE("gendered noun mappings") {
  Lexicon lex = builtin_lexicon();

  const LexiconEntry* fireman = lex.lookup("fireman");
  REQUIRE(fireman != nullptr);
  CHECK(fireman->alternatives == std::vector<std::string>{"firefighter"});
  CHECK(fireman->role == LexRole::noun);

  const LexiconEntry* laymen = lex.lookup("laymen");
  REQUIRE(laymen != nullptr);
  CHECK(laymen->alternatives == std::vector<std::string>{"lay people"});

  const LexiconEntry* policeman = lex.lookup("policeman");
  REQUIRE(policeman != nullptr);
  CHECK(policeman->alternatives == std::vector<std::string>{"police officer"});

  // The bundled noun list covers at least a dozen mappings.
  std::size_t nouns = 0;
  for (const LexiconEntry* e : lex.entries())
    if (e->role == LexRole::noun) ++nouns;
  CHECK(nouns >= 12);
}

TEST_CASE("neutral words are never keys") {
  Lexicon lex = builtin_lexicon();
  for (const char* w : {"they", "them", "their", "theirs", "themselves",
                        "themself", "they're", "they've", "they'll", "they'd"})
    CHECK(lex.lookup(w) == nullptr);
  CHECK(lex.lookup("pen") == nullptr);
}

TEST_CASE("pronoun sets are exactly the filter word sets") {
  Lexicon lex = builtin_lexicon();
  const std::unordered_set<std::string> masc = {
      "he", "him", "his", "himself", "he's", "he'll", "he'd"};
  const std::unordered_set<std::string> fem = {
      "she", "her", "hers", "herself", "she's", "she'll", "she'd"};
  CHECK(lex.masculine_pronouns() == masc);
  CHECK(lex.feminine_pronouns() == fem);
}

TEST_CASE("reflexive style switch") {
  Lexicon lex = builtin_lexicon(ReflexiveStyle::themself);
  const LexiconEntry* himself = lex.lookup("himself");
  REQUIRE(himself != nullptr);
  CHECK(himself->alternatives == std::vector<std::string>{"themself"});
}

TEST_CASE("word_gender_class") {
  CHECK(word_gender_class("he") == GenderClass::masculine);
  CHECK(word_gender_class("hers") == GenderClass::feminine);
  CHECK(word_gender_class("she's") == GenderClass::feminine);
  CHECK(word_gender_class("they") == GenderClass::neutral);
  CHECK(word_gender_class("themself") == GenderClass::neutral);
  CHECK(word_gender_class("pen") == GenderClass::none);
  // Gendered nouns are not pronouns and do not classify.
  CHECK(word_gender_class("fireman") == GenderClass::none);
}

TEST_CASE("load_lexicon extends the base") {
  std::istringstream in(
      "# custom rows\n"
      "spokeswoman -> spokesperson , noun\n"
      "forewoman -> foreperson , noun\n");
  Lexicon lex = load_lexicon(in, builtin_lexicon());
  const LexiconEntry* e = lex.lookup("spokeswoman");
  REQUIRE(e != nullptr);
  CHECK(e->alternatives == std::vector<std::string>{"spokesperson"});
  CHECK(e->role == LexRole::noun);
  // Base entries survive.
  CHECK(lex.lookup("fireman") != nullptr);
}

TEST_CASE("load_lexicon rejects neutral-word sources") {
  std::istringstream in("they -> he , subject_pronoun\n");
  CHECK_THROWS_AS(load_lexicon(in, builtin_lexicon()), std::exception);
}

TEST_CASE("load_lexicon reports parse errors with line numbers") {
  std::istringstream in("fine -> ok , noun\nbroken line without arrow\n");
  try {
    load_lexicon(in, builtin_lexicon());
    FAIL("expected a parse error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("empty file returns the base unchanged") {
  std::istringstream in("");
  Lexicon base = builtin_lexicon();
  const std::size_t size = base.size();
  Lexicon lex = load_lexicon(in, std::move(base));
  CHECK(lex.size() == size);
}

TEST_CASE("the pinned ambiguous alternative sets cannot be changed") {
  Lexicon lex = builtin_lexicon();
  LexiconEntry e;
  e.source = "his";
  e.alternatives = {"their"};  // dropping "theirs" is not allowed
  e.role = LexRole::poss_determiner;
  CHECK_THROWS_AS(lex.add(std::move(e)), std::invalid_argument);
}

TEST_CASE("add validates entries") {
  Lexicon lex = builtin_lexicon();
  LexiconEntry no_alts;
  no_alts.source = "stewardess";
  CHECK_THROWS_AS(lex.add(std::move(no_alts)), std::invalid_argument);

  LexiconEntry neutral_source;
  neutral_source.source = "them";
  neutral_source.alternatives = {"x"};
  CHECK_THROWS_AS(lex.add(std::move(neutral_source)), std::invalid_argument);
}

TEST_CASE("lexicon substitution is exhausted after one pass") {
  // Every replacement target is outside the lexicon's domain.
  Lexicon lex = builtin_lexicon();
  for (const LexiconEntry* e : lex.entries())
    for (const std::string& alt : e->alternatives) {
      // Multi-word alternatives check word by word.
      std::size_t start = 0;
      while (start <= alt.size()) {
        std::size_t space = alt.find(' ', start);
        std::string word = alt.substr(
            start, space == std::string::npos ? std::string::npos : space - start);
        if (!word.empty()) CHECK(lex.lookup(word) == nullptr);
        if (space == std::string::npos) break;
        start = space + 1;
      }
    }
}
