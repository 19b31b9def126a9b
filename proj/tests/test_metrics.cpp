#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnrw/lexicon.hpp"
#include "gnrw/metrics.hpp"
#include "gnrw/verb_lexicon.hpp"

using namespace gnrw;

namespace {

const Lexicon& lex() {
  static Lexicon l = builtin_lexicon();
  return l;
}
const VerbLexicon& vlex() { return builtin_verb_lexicon(); }

// Hand-derived corpus BLEU values, computed once with exact rational
// arithmetic and frozen here.
constexpr double kTol = 1e-9;
constexpr double kBleuTwoSentence = 68.87246539984298;   // precisions 9/10, 3/4, 2/3, 1/2; BP = 1
constexpr double kBleuShortHyp = 47.398785011707922;     // precisions 1, 3/4, 2/3, 1/2; BP = exp(1 - 7/5)

}  // namespace

TEST_CASE("single substitution zeroes unsmoothed BLEU via empty 3-gram overlap") {
  // ref: they walk their dog | hyp: they walk his dog
  // 1-gram 3/4, 2-gram 1/3, 3-gram 0/2 -> geometric mean is zero.
  const std::vector<std::string> refs = {"they walk their dog"};
  const std::vector<std::string> hyps = {"they walk his dog"};
  CHECK(corpus_bleu(hyps, refs) == 0.0);
}

TEST_CASE("smoothing turns the same case into exactly 50") {
  // Add-one on n>1: p1=3/4, p2=2/4, p3=1/3, p4=1/2; product 1/16; BP=1.
  const std::vector<std::string> refs = {"they walk their dog"};
  const std::vector<std::string> hyps = {"they walk his dog"};
  CHECK(std::abs(corpus_bleu(hyps, refs, BleuOptions{true}) - 50.0) < kTol);
}

TEST_CASE("two-sentence corpus BLEU matches the hand computation") {
  const std::vector<std::string> refs = {"they walk their dog .",
                                         "the plan is theirs ."};
  const std::vector<std::string> hyps = {"they walk their dog .",
                                         "the plan is ours ."};
  CHECK(std::abs(corpus_bleu(hyps, refs) - kBleuTwoSentence) < kTol);
}

TEST_CASE("brevity penalty applies when the hypothesis is shorter") {
  const std::vector<std::string> refs = {"they walk their dog every day ."};
  const std::vector<std::string> hyps = {"they walk their dog ."};
  CHECK(std::abs(corpus_bleu(hyps, refs) - kBleuShortHyp) < kTol);
}

TEST_CASE("identical corpora score exactly 100") {
  const std::vector<std::string> refs = {"they walk their dog .",
                                         "short one"};
  CHECK(corpus_bleu(refs, refs) == 100.0);
  CHECK(corpus_bleu(refs, refs, BleuOptions{true}) <= 100.0);
}

TEST_CASE("BLEU stays within [0, 100]") {
  const std::vector<std::string> refs = {"a b c d e f g h"};
  const std::vector<std::string> hyps = {"a b c d e f g h x y z"};
  const double v = corpus_bleu(hyps, refs);
  CHECK(v >= 0.0);
  CHECK(v <= 100.0);
}

TEST_CASE("mismatched corpus sizes are rejected") {
  CHECK_THROWS_AS(corpus_bleu({"a"}, {"a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(corpus_wer({"a"}, {}), std::invalid_argument);
}

TEST_CASE("WER counts edits over reference tokens") {
  // One substitution in a ten-token reference: 10%.
  const std::string ref = "they walk their dog every single day of the week";
  const std::string hyp = "they walk his dog every single day of the week";
  CHECK(corpus_wer({hyp}, {ref}) == 10.0);

  // Micro average: adding a perfect ten-token pair halves it.
  const std::string ten = "one two three four five six seven eight nine ten";
  CHECK(corpus_wer({hyp, ten}, {ref, ten}) == 5.0);

  // Deletion plus insertion: 2 edits over 5 reference tokens.
  CHECK(corpus_wer({"a c d e ."}, {"a b c d ."}) == 40.0);

  CHECK(corpus_wer({"same here"}, {"same here"}) == 0.0);
}

TEST_CASE("edit script is canonical and minimal") {
  const std::vector<std::string> ref = {"a", "b", "c", "d", "."};
  const std::vector<std::string> hyp = {"a", "c", "d", "e", "."};
  auto script = edit_script(ref, hyp);
  // a=a match, b deleted, c=c, d=d, e inserted, .=. match
  REQUIRE(script.size() == 6);
  CHECK(script[0].op == EditOp::match);
  CHECK(script[1].op == EditOp::deletion);
  CHECK(script[1].ref_pos == 1);
  CHECK(script[1].hyp_pos == kNoPos);
  CHECK(script[2].op == EditOp::match);
  CHECK(script[3].op == EditOp::match);
  CHECK(script[4].op == EditOp::insertion);
  CHECK(script[4].hyp_pos == 3);
  CHECK(script[4].ref_pos == kNoPos);
  CHECK(script[5].op == EditOp::match);

  auto sub = edit_script({"x"}, {"y"});
  REQUIRE(sub.size() == 1);
  CHECK(sub[0].op == EditOp::substitution);
  CHECK(sub[0].ref_pos == 0);
  CHECK(sub[0].hyp_pos == 0);

  CHECK(edit_script({}, {}).empty());
  CHECK(to_string(EditOp::match) == std::string("match"));
  CHECK(to_string(EditOp::substitution) == std::string("substitution"));
}

TEST_CASE("mistake classification buckets") {
  // Pronoun substitution.
  auto c = classify_mistakes("they walk their dog", "they walk them dog",
                             lex(), vlex());
  CHECK(c.pronoun == 1);
  CHECK(c.total() == 1);

  // Verb form substitution.
  c = classify_mistakes("they dance well", "they dances well", lex(), vlex());
  CHECK(c.verb == 1);
  CHECK(c.total() == 1);

  // Pure re-spacing: the concatenations agree, so whitespace only.
  c = classify_mistakes("they like their job", "they like theirjob", lex(),
                        vlex());
  CHECK(c.whitespace_symbol == c.total());
  CHECK(c.whitespace_symbol > 0);

  // Symbol mismatch.
  c = classify_mistakes("done !", "done ?", lex(), vlex());
  CHECK(c.whitespace_symbol == 1);
  CHECK(c.total() == 1);

  // Anything else.
  c = classify_mistakes("the cat sat", "the hat sat", lex(), vlex());
  CHECK(c.other == 1);
  CHECK(c.total() == 1);

  // Perfect match: nothing to classify.
  c = classify_mistakes("all good here", "all good here", lex(), vlex());
  CHECK(c.total() == 0);

  CHECK(to_string(MistakeClass::pronoun) == std::string("pronoun"));
  CHECK(to_string(MistakeClass::whitespace_symbol) ==
        std::string("whitespace_symbol"));
}

TEST_CASE("evaluate aggregates per gender and per domain") {
  std::vector<EvalRecord> recs;
  recs.push_back({"they walk their dog .", "they walk their dog .",
                  GenderScan::masculine, "news"});
  recs.push_back({"they read their book .", "they read their book .",
                  GenderScan::feminine, "news"});

  auto rep = evaluate(recs, lex(), vlex());
  CHECK(rep.sentences == 2);
  CHECK(rep.bleu == 100.0);
  CHECK(rep.wer == 0.0);
  CHECK(rep.masculine.sentences == 1);
  CHECK(rep.feminine.sentences == 1);
  CHECK(rep.masculine.wer == 0.0);
  CHECK(rep.feminine.wer == 0.0);
  CHECK(rep.mistakes.total() == 0);
  CHECK_FALSE(rep.balance_warning);
  REQUIRE(rep.per_domain.count("news") == 1);
  CHECK(rep.per_domain.at("news").sentences == 2);
  CHECK(rep.per_domain.at("news").bleu == rep.bleu);
  CHECK(rep.per_domain.at("news").wer == rep.wer);
}

TEST_CASE("evaluate flags gender imbalance past ten percent") {
  std::vector<EvalRecord> recs;
  for (int i = 0; i < 8; ++i)
    recs.push_back({"they run .", "they run .", GenderScan::masculine, "t"});
  recs.push_back({"they run .", "they run .", GenderScan::feminine, "t"});

  auto rep = evaluate(recs, lex(), vlex());
  CHECK(rep.balance_warning);
  CHECK_FALSE(rep.balance_note.empty());

  // Balanced inputs carry no warning.
  recs.clear();
  for (int i = 0; i < 4; ++i) {
    recs.push_back({"they run .", "they run .", GenderScan::masculine, "t"});
    recs.push_back({"they run .", "they run .", GenderScan::feminine, "t"});
  }
  CHECK_FALSE(evaluate(recs, lex(), vlex()).balance_warning);
}

TEST_CASE("evaluate separates per-gender error rates") {
  std::vector<EvalRecord> recs;
  // Feminine-source pairs are perfect, masculine-source pairs have one error.
  recs.push_back({"they walk his dog every single day of the week",
                  "they walk their dog every single day of the week",
                  GenderScan::masculine, "a"});
  recs.push_back({"they read their book every single day of the week",
                  "they read their book every single day of the week",
                  GenderScan::feminine, "a"});

  auto rep = evaluate(recs, lex(), vlex());
  CHECK(rep.masculine.wer == 10.0);
  CHECK(rep.feminine.wer == 0.0);
  CHECK(rep.mistakes.pronoun == 1);
  CHECK(rep.wer == 5.0);
}

TEST_CASE("mistake totals are invariant under record order") {
  std::vector<EvalRecord> recs = {
      {"they dances", "they dance", GenderScan::masculine, "x"},
      {"see them go", "see them go", GenderScan::feminine, "x"},
      {"his plan", "their plan", GenderScan::feminine, "x"},
  };
  auto a = evaluate(recs, lex(), vlex());
  std::reverse(recs.begin(), recs.end());
  auto b = evaluate(recs, lex(), vlex());
  CHECK(a.mistakes.pronoun == b.mistakes.pronoun);
  CHECK(a.mistakes.verb == b.mistakes.verb);
  CHECK(a.mistakes.whitespace_symbol == b.mistakes.whitespace_symbol);
  CHECK(a.mistakes.other == b.mistakes.other);
  CHECK(a.wer == b.wer);
}

TEST_CASE("evaluate rejects empty input") {
  CHECK_THROWS_AS(evaluate({}, lex(), vlex()), std::invalid_argument);
}

TEST_CASE("report JSON carries the headline numbers and distribution") {
  std::vector<EvalRecord> recs = {
      {"they walk his dog every single day of the week",
       "they walk their dog every single day of the week",
       GenderScan::masculine, "news"},
      {"they read their book every single day of the week",
       "they read their book every single day of the week",
       GenderScan::feminine, "tv"},
  };
  auto rep = evaluate(recs, lex(), vlex());
  const std::string js = report_json(rep);
  CHECK(js.find("\"bleu\"") != std::string::npos);
  CHECK(js.find("\"wer\"") != std::string::npos);
  CHECK(js.find("\"per_gender\"") != std::string::npos);
  CHECK(js.find("\"masculine\"") != std::string::npos);
  CHECK(js.find("\"feminine\"") != std::string::npos);
  CHECK(js.find("\"per_domain\"") != std::string::npos);
  CHECK(js.find("\"news\"") != std::string::npos);
  CHECK(js.find("\"mistakes\"") != std::string::npos);
  CHECK(js.find("\"mistake_distribution\"") != std::string::npos);
  CHECK(js.find("\"pronoun\"") != std::string::npos);
  CHECK(js.find("\"balance_warning\"") != std::string::npos);
}

TEST_CASE("gold TSV parses and validates") {
  std::istringstream in(
      "He walks his dog.\tThey walk their dog.\tmasculine\tnews\n"
      "She reads.\tThey read.\tf\ttv\n");
  auto rows = read_gold_tsv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].source == "He walks his dog.");
  CHECK(rows[0].reference == "They walk their dog.");
  CHECK(rows[0].gender == GenderScan::masculine);
  CHECK(rows[0].domain == "news");
  CHECK(rows[1].gender == GenderScan::feminine);

  std::istringstream bad("only two\tfields\n");
  CHECK_THROWS_AS(read_gold_tsv(bad), std::runtime_error);

  std::istringstream badg("a\tb\tneuter\tx\n");
  CHECK_THROWS_AS(read_gold_tsv(badg), std::runtime_error);
}
