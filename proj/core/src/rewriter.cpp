#include "gnrw/rewriter.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>

#include "gnrw/morph.hpp"
#include "gnrw/syntax.hpp"
#include "json.hpp"

namespace gnrw {
namespace {

bool is_wordlike(const Token& t) {
  return t.kind == TokenKind::word || t.kind == TokenKind::contraction;
}

// Scoring operates on lowercased words; multi-word replacement surfaces
// ("police officers") contribute one scoring word apiece.
void append_scoring_words(std::vector<std::string>& out, std::string_view surface) {
  std::string folded = fold_case(surface);
  std::size_t start = 0;
  while (start < folded.size()) {
    std::size_t sp = folded.find(' ', start);
    if (sp == std::string::npos) {
      out.push_back(folded.substr(start));
      return;
    }
    if (sp > start) out.push_back(folded.substr(start, sp - start));
    start = sp + 1;
  }
}

constexpr std::size_t kExhaustiveCap = 64;   // candidate budget per sentence
constexpr double kTieBreak = 1e-12;          // smaller wins only beyond this

}  // namespace

Rewriter::Rewriter(const Lexicon& lexicon, const VerbLexicon& verbs,
                   const NgramLM* model)
    : lex_(&lexicon), verbs_(&verbs), model_(model) {}

RewriteTrace Rewriter::rewrite(std::string_view text,
                               const RewriteOptions& options) const {
  RewriteTrace trace;
  trace.source = std::string(text);
  TokenizedSentence sent = tokenize(text);
  trace.source_gender = detect_gender(sent, *lex_);
  if (!options.bypass_gender_check) {
    if (trace.source_gender == GenderScan::none)
      throw RewriteError("no gendered pronoun found: " + trace.source);
    if (trace.source_gender == GenderScan::mixed) {
      // Name the offending forms so the caller can see both sides at once.
      std::string masc, fem;
      for (const Token& t : sent.tokens) {
        if (masc.empty() && lex_->masculine_pronouns().count(t.lower))
          masc = t.lower;
        if (fem.empty() && lex_->feminine_pronouns().count(t.lower))
          fem = t.lower;
      }
      throw RewriteError("sentence mixes masculine and feminine pronouns (\"" +
                         masc + "\", \"" + fem + "\"): " + trace.source);
    }
  }

  struct Slot {
    std::size_t pos;
    std::vector<std::string> alts;  // case-matched, in lexicon order
  };
  std::vector<Slot> slots;
  std::vector<Edit> edits;
  std::vector<std::string> replacement(sent.tokens.size());  // "" = unchanged
  std::vector<std::size_t> subject_positions;

  for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
    const Token& t = sent.tokens[i];
    if (!is_wordlike(t)) continue;
    const LexiconEntry* entry = lex_->lookup(t.lower);
    if (!entry) continue;
    if (entry->role == LexRole::subject_pronoun) subject_positions.push_back(i);
    if (entry->ambiguous) {
      Slot s{i, {}};
      s.alts.reserve(entry->alternatives.size());
      for (const auto& a : entry->alternatives)
        s.alts.push_back(match_case(t.surface, a));
      slots.push_back(std::move(s));
    } else {
      std::string after = match_case(t.surface, entry->alternatives[0]);
      replacement[i] = after;
      edits.push_back(Edit{i, t.surface, after,
                           entry->role == LexRole::noun ? EditCategory::noun
                                                        : EditCategory::pronoun,
                           false,
                           {after}});
    }
  }

  // Verbs agreeing with a rewritten subject pronoun lose their -s. The same
  // verb can be reached from two pronouns ("is she happy and does she
  // dance"), hence the set.
  std::set<std::size_t> verb_positions;
  for (std::size_t p : subject_positions)
    for (std::size_t v : find_agreeing_verbs(sent, p, *verbs_))
      verb_positions.insert(v);
  for (std::size_t v : verb_positions) {
    const Token& t = sent.tokens[v];
    std::string after = pluralize_verb(t.surface);
    replacement[v] = after;
    edits.push_back(Edit{v, t.surface, after, EditCategory::verb, false, {after}});
  }

  std::vector<std::size_t> chosen(slots.size(), 0);
  const bool have_model = model_ != nullptr && model_->trained();
  if (!slots.empty() && have_model) {
    // One mutable word sequence; each slot owns exactly one position in it.
    std::vector<std::string> words;
    std::vector<std::size_t> slot_word_index(slots.size());
    std::size_t si = 0;
    for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
      if (si < slots.size() && slots[si].pos == i) {
        slot_word_index[si] = words.size();
        words.push_back(fold_case(slots[si].alts[0]));
        ++si;
        continue;
      }
      append_scoring_words(words,
                           replacement[i].empty() ? sent.tokens[i].surface
                                                  : replacement[i]);
    }

    std::size_t scored = 0;
    auto score = [&](const std::vector<std::size_t>& assign) {
      for (std::size_t s = 0; s < slots.size(); ++s)
        words[slot_word_index[s]] = fold_case(slots[s].alts[assign[s]]);
      ++scored;
      return model_->perplexity(words);
    };

    std::size_t product = 1;
    bool too_many = false;
    for (const Slot& s : slots) {
      product *= s.alts.size();
      if (product > kExhaustiveCap) {
        too_many = true;
        break;
      }
    }

    double best_ppl = 0.0;
    if (!too_many) {
      std::vector<std::size_t> assign(slots.size(), 0);
      for (std::size_t combo = 0; combo < product; ++combo) {
        std::size_t rem = combo;  // leftmost slot is the most significant digit
        for (std::size_t s = slots.size(); s-- > 0;) {
          assign[s] = rem % slots[s].alts.size();
          rem /= slots[s].alts.size();
        }
        double ppl = score(assign);
        if (combo == 0 || ppl < best_ppl - kTieBreak) {
          best_ppl = ppl;
          chosen = assign;
        }
      }
    } else {
      // Greedy sweep: earlier slots freeze, later ones sit at their first
      // alternative until their turn.
      std::vector<std::size_t> assign(slots.size(), 0);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        std::size_t best_j = 0;
        double best_j_ppl = 0.0;
        for (std::size_t j = 0; j < slots[s].alts.size(); ++j) {
          assign[s] = j;
          double ppl = score(assign);
          if (j == 0 || ppl < best_j_ppl - kTieBreak) {
            best_j_ppl = ppl;
            best_j = j;
          }
        }
        assign[s] = best_j;
        best_ppl = best_j_ppl;
      }
      chosen = assign;
    }
    trace.candidates_scored = scored;
    trace.chosen_perplexity = best_ppl;
  }

  for (std::size_t s = 0; s < slots.size(); ++s) {
    const Slot& sl = slots[s];
    const Token& t = sent.tokens[sl.pos];
    std::string after = sl.alts[chosen[s]];
    replacement[sl.pos] = after;
    edits.push_back(Edit{sl.pos, t.surface, after, EditCategory::pronoun, true,
                         sl.alts});
  }

  TokenizedSentence out = sent;
  for (std::size_t i = 0; i < out.tokens.size(); ++i)
    if (!replacement[i].empty()) out.tokens[i].surface = replacement[i];
  trace.output = detokenize(out);

  if (have_model && slots.empty()) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < out.tokens.size(); ++i)
      append_scoring_words(words, out.tokens[i].surface);
    trace.chosen_perplexity = model_->perplexity(words);
    trace.candidates_scored = 1;
  }

  std::sort(edits.begin(), edits.end(),
            [](const Edit& a, const Edit& b) { return a.position < b.position; });
  trace.edits = std::move(edits);

  if (detect_gender(tokenize(trace.output), *lex_) != GenderScan::none)
    throw RewriteError("rewrite left gendered pronouns behind: " + trace.output);
  return trace;
}

std::vector<Rewriter::BatchItem> Rewriter::rewrite_batch(
    const std::vector<std::string>& lines, const RewriteOptions& options,
    unsigned jobs) const {
  std::vector<BatchItem> out(lines.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        out[i].trace = rewrite(lines[i], options);
        out[i].ok = true;
      } catch (const std::exception& e) {
        out[i].ok = false;
        out[i].error = e.what();
      }
    }
  };
  if (jobs <= 1 || lines.size() < 2) {
    work(0, lines.size());
    return out;
  }
  const std::size_t n = std::min<std::size_t>(jobs, lines.size());
  const std::size_t chunk = (lines.size() + n - 1) / n;
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t b = t * chunk;
    std::size_t e = std::min(lines.size(), b + chunk);
    if (b >= e) break;
    threads.emplace_back(work, b, e);
  }
  for (auto& th : threads) th.join();
  return out;
}

InflectResult Rewriter::inflect_sentence(std::string_view text) const {
  InflectResult res;
  res.source = std::string(text);
  TokenizedSentence sent = tokenize(text);
  GenderScan g = detect_gender(sent, *lex_);
  if (g != GenderScan::masculine && g != GenderScan::feminine)
    throw RewriteError(std::string("cannot inflect a ") +
                       (g == GenderScan::mixed ? "mixed" : "neutral") +
                       "-gender sentence: " + res.source);
  res.from = g;
  const GenderClass target = g == GenderScan::masculine ? GenderClass::feminine
                                                        : GenderClass::masculine;

  // The neutral rewrite already disambiguated her/his between their object,
  // determiner and possessive readings; reuse its choices.
  RewriteTrace guide = rewrite(text);
  std::unordered_map<std::size_t, std::string> chosen_neutral;
  for (const Edit& e : guide.edits)
    if (e.category == EditCategory::pronoun && e.ambiguous)
      chosen_neutral[e.position] = fold_case(e.after);

  TokenizedSentence out = sent;
  for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
    const Token& t = sent.tokens[i];
    if (!is_wordlike(t)) continue;
    const LexiconEntry* entry = lex_->lookup(t.lower);
    if (!entry || entry->role == LexRole::noun) continue;  // nouns stay put
    std::vector<std::string> alts = inflect_pronoun(t.surface, target);
    std::string after;
    bool ambiguous = alts.size() > 1;
    if (!ambiguous) {
      after = alts[0];
    } else {
      auto it = chosen_neutral.find(i);
      const std::string neutral = it == chosen_neutral.end() ? "" : it->second;
      std::string lowered;
      if (t.lower == "her")
        lowered = neutral == "their" ? "his" : "him";
      else if (t.lower == "his")
        lowered = neutral == "theirs" ? "hers" : "her";
      else
        lowered = fold_case(alts[0]);
      after = match_case(t.surface, lowered);
    }
    out.tokens[i].surface = after;
    res.edits.push_back(
        Edit{i, t.surface, after, EditCategory::pronoun, ambiguous, alts});
  }
  res.output = detokenize(out);
  return res;
}

std::string trace_to_json(const RewriteTrace& trace) {
  nlohmann::json j;
  j["source"] = trace.source;
  j["output"] = trace.output;
  j["source_gender"] = to_string(trace.source_gender);
  j["candidates_scored"] = trace.candidates_scored;
  j["chosen_perplexity"] = trace.chosen_perplexity;
  nlohmann::json arr = nlohmann::json::array();
  for (const Edit& e : trace.edits) {
    nlohmann::json je;
    je["position"] = e.position;
    je["before"] = e.before;
    je["after"] = e.after;
    je["category"] = to_string(e.category);
    je["ambiguous"] = e.ambiguous;
    je["alternatives"] = e.alternatives_considered;
    arr.push_back(std::move(je));
  }
  j["edits"] = std::move(arr);
  // Sources may contain arbitrary bytes; never let bad UTF-8 abort a trace.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

const char* to_string(EditCategory c) {
  switch (c) {
    case EditCategory::pronoun: return "pronoun";
    case EditCategory::verb: return "verb";
    case EditCategory::noun: return "noun";
  }
  return "unknown";
}

}  // namespace gnrw
