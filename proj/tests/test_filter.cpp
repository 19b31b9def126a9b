#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "gnrw/filter.hpp"
#include "gnrw/lexicon.hpp"

using namespace gnrw;

namespace {
const Lexicon& lex() {
  static const Lexicon kLex = builtin_lexicon();
  return kLex;
}

std::vector<std::string> lines_of(const std::string& blob) {
  std::vector<std::string> out;
  std::istringstream in(blob);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}
}  // namespace

TEST_CASE("detect_gender basic classes") {
  CHECK(detect_gender("Does she know what happened to her friend?", lex()) ==
        GenderScan::feminine);
  CHECK(detect_gender("The pen is blue.", lex()) == GenderScan::none);
  CHECK(detect_gender("She walks his dog", lex()) == GenderScan::mixed);
  CHECK(detect_gender("He said he saw his own shadow", lex()) ==
        GenderScan::masculine);
}

TEST_CASE("detect_gender is case-insensitive") {
  CHECK(detect_gender("HE ran", lex()) == GenderScan::masculine);
  CHECK(detect_gender("SHE'S READY", lex()) == GenderScan::feminine);
}

TEST_CASE("word-boundary matching: no firing inside words") {
  CHECK(detect_gender("the shed is closed", lex()) == GenderScan::none);
  CHECK(detect_gender("a hero rushed in", lex()) == GenderScan::none);
  CHECK(detect_gender("the theme is history", lex()) == GenderScan::none);
  CHECK(detect_gender("hervé played hermit themes", lex()) == GenderScan::none);
}

TEST_CASE("contraction forms count toward the pronoun sets") {
  CHECK(detect_gender("he's happy", lex()) == GenderScan::masculine);
  CHECK(detect_gender("she'll come later", lex()) == GenderScan::feminine);
  CHECK(detect_gender("he'd rather stay", lex()) == GenderScan::masculine);
}

TEST_CASE("gendered nouns do not influence detection") {
  CHECK(detect_gender("The fireman arrived.", lex()) == GenderScan::none);
  CHECK(detect_gender("The fireman said she was fine.", lex()) ==
        GenderScan::feminine);
}

TEST_CASE("URLs are opaque to detection") {
  CHECK(detect_gender("see https://he.example.com/his now", lex()) ==
        GenderScan::none);
}

TEST_CASE("filter_corpus buckets a toy corpus") {
  std::istringstream in(
      "He walks home.\n"
      "She sings well.\n"
      "She walks his dog.\n"
      "The pen is blue.\n");
  std::ostringstream gendered, neutral;
  FilterStats stats = filter_corpus(in, lex(), gendered, neutral);

  CHECK(stats.total == 4);
  CHECK(stats.kept_masculine == 1);
  CHECK(stats.kept_feminine == 1);
  CHECK(stats.dropped_mixed == 1);
  CHECK(stats.dropped_neutral == 1);
  CHECK(stats.total == stats.kept_masculine + stats.kept_feminine +
                           stats.dropped_mixed + stats.dropped_neutral);

  auto g = lines_of(gendered.str());
  REQUIRE(g.size() == 2);
  CHECK(g[0] == "He walks home.");
  CHECK(g[1] == "She sings well.");
  auto n = lines_of(neutral.str());
  REQUIRE(n.size() == 1);
  CHECK(n[0] == "The pen is blue.");
}

TEST_CASE("filter_corpus on empty input") {
  std::istringstream in("");
  std::ostringstream gendered, neutral;
  FilterStats stats = filter_corpus(in, lex(), gendered, neutral);
  CHECK(stats.total == 0);
  CHECK(stats.kept_masculine == 0);
  CHECK(stats.kept_feminine == 0);
  CHECK(stats.dropped_mixed == 0);
  CHECK(stats.dropped_neutral == 0);
  CHECK(gendered.str().empty());
  CHECK(neutral.str().empty());
}

TEST_CASE("filtering is stable: kept lines stay kept") {
  std::istringstream in(
      "He walks home.\n"
      "She sings well.\n"
      "He's late.\n"
      "Her dog barks.\n");
  std::ostringstream gendered, neutral;
  FilterStats first = filter_corpus(in, lex(), gendered, neutral);
  CHECK(first.kept_masculine + first.kept_feminine == 4);

  std::istringstream again(gendered.str());
  std::ostringstream gendered2, neutral2;
  FilterStats second = filter_corpus(again, lex(), gendered2, neutral2);
  CHECK(second.kept_masculine + second.kept_feminine == 4);
  CHECK(gendered2.str() == gendered.str());
}

TEST_CASE("to_string names every scan value") {
  CHECK(std::string(to_string(GenderScan::masculine)) == "masculine");
  CHECK(std::string(to_string(GenderScan::feminine)) == "feminine");
  CHECK(std::string(to_string(GenderScan::none)) == "none");
  CHECK(std::string(to_string(GenderScan::mixed)) == "mixed");
}
