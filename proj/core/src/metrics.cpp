#include "gnrw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "gnrw/dataset.hpp"
#include "gnrw/token.hpp"
#include "json.hpp"

namespace gnrw {
namespace {

std::vector<std::string> surface_tokens(const std::string& text) {
  TokenizedSentence sent = tokenize(text);
  std::vector<std::string> out;
  out.reserve(sent.tokens.size());
  for (const Token& t : sent.tokens) out.push_back(t.surface);
  return out;
}

std::string ngram_key(const std::vector<std::string>& toks, std::size_t i,
                      std::size_t n) {
  std::string key;
  for (std::size_t k = 0; k < n; ++k) {
    if (k) key += '\x1f';
    key += toks[i + k];
  }
  return key;
}

bool is_pronoun_form(std::string_view lower, const Lexicon& lex) {
  return Lexicon::neutral_words().count(std::string(lower)) > 0 ||
         lex.masculine_pronouns().count(std::string(lower)) > 0 ||
         lex.feminine_pronouns().count(std::string(lower)) > 0;
}

}  // namespace

double corpus_bleu(const std::vector<std::string>& hypotheses,
                   const std::vector<std::string>& references,
                   BleuOptions options) {
  if (hypotheses.size() != references.size())
    throw std::invalid_argument("hypothesis/reference count mismatch");
  constexpr int kMaxN = 4;
  std::uint64_t matched[kMaxN] = {0, 0, 0, 0};
  std::uint64_t total[kMaxN] = {0, 0, 0, 0};
  std::uint64_t hyp_len = 0, ref_len = 0;

  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const auto hyp = surface_tokens(hypotheses[s]);
    const auto ref = surface_tokens(references[s]);
    hyp_len += hyp.size();
    ref_len += ref.size();
    for (int n = 1; n <= kMaxN; ++n) {
      const std::size_t un = static_cast<std::size_t>(n);
      if (hyp.size() < un) break;
      total[n - 1] += hyp.size() - un + 1;
      std::unordered_map<std::string, std::uint64_t> ref_counts;
      if (ref.size() >= un)
        for (std::size_t i = 0; i + un <= ref.size(); ++i)
          ++ref_counts[ngram_key(ref, i, un)];
      std::unordered_map<std::string, std::uint64_t> used;
      for (std::size_t i = 0; i + un <= hyp.size(); ++i) {
        std::string key = ngram_key(hyp, i, un);
        auto it = ref_counts.find(key);
        if (it != ref_counts.end() && used[key] < it->second) {
          ++used[key];
          ++matched[n - 1];
        }
      }
    }
  }

  if (hyp_len == 0) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= kMaxN; ++n) {
    double m = static_cast<double>(matched[n - 1]);
    double t = static_cast<double>(total[n - 1]);
    if (options.smoothed && n > 1) {
      m += 1.0;
      t += 1.0;
    }
    if (m <= 0.0 || t <= 0.0) return 0.0;
    log_sum += 0.25 * std::log(m / t);
  }
  const double bp =
      hyp_len >= ref_len
          ? 1.0
          : std::exp(1.0 - static_cast<double>(ref_len) /
                               static_cast<double>(hyp_len));
  return 100.0 * bp * std::exp(log_sum);
}

std::vector<AlignedEdit> edit_script(const std::vector<std::string>& ref_tokens,
                                     const std::vector<std::string>& hyp_tokens) {
  const std::size_t R = ref_tokens.size(), H = hyp_tokens.size();
  std::vector<std::vector<std::uint32_t>> dp(R + 1,
                                             std::vector<std::uint32_t>(H + 1));
  for (std::size_t i = 0; i <= R; ++i) dp[i][0] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= H; ++j) dp[0][j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= R; ++i) {
    for (std::size_t j = 1; j <= H; ++j) {
      const bool eq = ref_tokens[i - 1] == hyp_tokens[j - 1];
      std::uint32_t best = dp[i - 1][j - 1] + (eq ? 0 : 1);
      best = std::min(best, dp[i - 1][j] + 1);  // deletion
      best = std::min(best, dp[i][j - 1] + 1);  // insertion
      dp[i][j] = best;
    }
  }

  // Backtrack, preferring match, then substitution, then deletion, then
  // insertion; the script comes out deterministic and deletion-first.
  std::vector<AlignedEdit> script;
  std::size_t i = R, j = H;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref_tokens[i - 1] == hyp_tokens[j - 1] &&
        dp[i][j] == dp[i - 1][j - 1]) {
      script.push_back({EditOp::match, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && j > 0 && dp[i][j] == dp[i - 1][j - 1] + 1) {
      script.push_back({EditOp::substitution, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
      script.push_back({EditOp::deletion, i - 1, kNoPos});
      --i;
    } else {
      script.push_back({EditOp::insertion, kNoPos, j - 1});
      --j;
    }
  }
  std::reverse(script.begin(), script.end());
  return script;
}

double corpus_wer(const std::vector<std::string>& hypotheses,
                  const std::vector<std::string>& references) {
  if (hypotheses.size() != references.size())
    throw std::invalid_argument("hypothesis/reference count mismatch");
  std::uint64_t edits = 0, ref_len = 0;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const auto hyp = surface_tokens(hypotheses[s]);
    const auto ref = surface_tokens(references[s]);
    ref_len += ref.size();
    for (const AlignedEdit& e : edit_script(ref, hyp))
      if (e.op != EditOp::match) ++edits;
  }
  if (ref_len == 0)
    throw std::invalid_argument("reference corpus has no tokens");
  return 100.0 * static_cast<double>(edits) / static_cast<double>(ref_len);
}

MistakeCounts classify_mistakes(const std::string& reference,
                                const std::string& hypothesis,
                                const Lexicon& lex, const VerbLexicon& vlex) {
  const TokenizedSentence ref = tokenize(reference);
  const TokenizedSentence hyp = tokenize(hypothesis);
  std::vector<std::string> ref_surf, hyp_surf;
  for (const Token& t : ref.tokens) ref_surf.push_back(t.surface);
  for (const Token& t : hyp.tokens) hyp_surf.push_back(t.surface);
  const auto script = edit_script(ref_surf, hyp_surf);

  MistakeCounts counts;
  std::size_t i = 0;
  while (i < script.size()) {
    if (script[i].op == EditOp::match) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < script.size() && script[run_end].op != EditOp::match)
      ++run_end;
    // Pure re-spacing shows up as a mismatch run whose reference and
    // hypothesis sides spell the same characters ("New York" vs "NewYork").
    std::string ref_cat, hyp_cat;
    for (std::size_t k = i; k < run_end; ++k) {
      if (script[k].ref_pos != kNoPos) ref_cat += ref_surf[script[k].ref_pos];
      if (script[k].hyp_pos != kNoPos) hyp_cat += hyp_surf[script[k].hyp_pos];
    }
    const bool respacing = !ref_cat.empty() && ref_cat == hyp_cat;

    for (std::size_t k = i; k < run_end; ++k) {
      const Token& tok = script[k].ref_pos != kNoPos
                             ? ref.tokens[script[k].ref_pos]
                             : hyp.tokens[script[k].hyp_pos];
      if (respacing || tok.kind == TokenKind::punctuation ||
          tok.kind == TokenKind::symbol || tok.kind == TokenKind::emoji)
        ++counts.whitespace_symbol;  // the words survived, the spacing didn't
      else if (is_pronoun_form(tok.lower, lex))
        ++counts.pronoun;
      else if (vlex.is_known_verb_form(tok.lower))
        ++counts.verb;
      else
        ++counts.other;
    }
    i = run_end;
  }
  return counts;
}

EvalReport evaluate(const std::vector<EvalRecord>& records, const Lexicon& lex,
                    const VerbLexicon& vlex, BleuOptions options) {
  if (records.empty())
    throw std::invalid_argument("nothing to evaluate");
  EvalReport report;
  report.bleu_options = options;
  report.sentences = records.size();

  std::vector<std::string> all_h, all_r;
  for (const EvalRecord& r : records) {
    all_h.push_back(r.hypothesis);
    all_r.push_back(r.reference);
  }
  report.bleu = corpus_bleu(all_h, all_r, options);
  report.wer = corpus_wer(all_h, all_r);

  auto group_stats = [&](auto&& pred) {
    GroupStats g;
    std::vector<std::string> hs, rs;
    for (const EvalRecord& r : records) {
      if (!pred(r)) continue;
      hs.push_back(r.hypothesis);
      rs.push_back(r.reference);
    }
    g.sentences = hs.size();
    if (!hs.empty()) {
      g.bleu = corpus_bleu(hs, rs, options);
      g.wer = corpus_wer(hs, rs);
    }
    return g;
  };

  report.masculine = group_stats(
      [](const EvalRecord& r) { return r.gender == GenderScan::masculine; });
  report.feminine = group_stats(
      [](const EvalRecord& r) { return r.gender == GenderScan::feminine; });
  std::map<std::string, bool> domains;
  for (const EvalRecord& r : records)
    if (!r.domain.empty()) domains[r.domain] = true;
  for (const auto& [domain, unused] : domains) {
    (void)unused;
    report.per_domain[domain] = group_stats(
        [&](const EvalRecord& r) { return r.domain == domain; });
  }

  for (const EvalRecord& r : records) {
    MistakeCounts c = classify_mistakes(r.reference, r.hypothesis, lex, vlex);
    report.mistakes.pronoun += c.pronoun;
    report.mistakes.verb += c.verb;
    report.mistakes.whitespace_symbol += c.whitespace_symbol;
    report.mistakes.other += c.other;
  }

  const double m = static_cast<double>(report.masculine.sentences);
  const double f = static_cast<double>(report.feminine.sentences);
  const double top = std::max(m, f);
  if (top > 0.0 && std::abs(m - f) > 0.1 * top) {
    report.balance_warning = true;
    report.balance_note = "gender imbalance: " + std::to_string(report.masculine.sentences) +
                          " masculine vs " + std::to_string(report.feminine.sentences) +
                          " feminine sentences";
  }
  return report;
}

std::string report_json(const EvalReport& r) {
  nlohmann::json j;
  j["sentences"] = r.sentences;
  j["bleu"] = r.bleu;
  j["wer"] = r.wer;
  j["smoothed_bleu"] = r.bleu_options.smoothed;
  auto group = [](const GroupStats& g) {
    nlohmann::json out;
    out["sentences"] = g.sentences;
    out["bleu"] = g.bleu;
    out["wer"] = g.wer;
    return out;
  };
  j["per_gender"]["masculine"] = group(r.masculine);
  j["per_gender"]["feminine"] = group(r.feminine);
  j["per_domain"] = nlohmann::json::object();
  for (const auto& [domain, stats] : r.per_domain)
    j["per_domain"][domain] = group(stats);
  j["mistakes"]["pronoun"] = r.mistakes.pronoun;
  j["mistakes"]["verb"] = r.mistakes.verb;
  j["mistakes"]["whitespace_symbol"] = r.mistakes.whitespace_symbol;
  j["mistakes"]["other"] = r.mistakes.other;
  j["mistakes"]["total"] = r.mistakes.total();
  if (const double total = static_cast<double>(r.mistakes.total()); total > 0) {
    j["mistake_distribution"]["pronoun"] = r.mistakes.pronoun / total;
    j["mistake_distribution"]["verb"] = r.mistakes.verb / total;
    j["mistake_distribution"]["whitespace_symbol"] =
        r.mistakes.whitespace_symbol / total;
    j["mistake_distribution"]["other"] = r.mistakes.other / total;
  }
  j["balance_warning"] = r.balance_warning;
  if (r.balance_warning) j["balance_note"] = r.balance_note;
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::vector<GoldRecord> read_gold_tsv(std::istream& in) {
  std::vector<GoldRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos)
        throw std::runtime_error("gold line " + std::to_string(lineno) +
                                 ": expected four tab-separated fields");
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    fields.push_back(line.substr(start));
    GoldRecord rec;
    try {
      rec.source = unescape_tsv_field(fields[0]);
      rec.reference = unescape_tsv_field(fields[1]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("gold line " + std::to_string(lineno) + ": " +
                               e.what());
    }
    if (fields[2] == "masculine" || fields[2] == "m")
      rec.gender = GenderScan::masculine;
    else if (fields[2] == "feminine" || fields[2] == "f")
      rec.gender = GenderScan::feminine;
    else
      throw std::runtime_error("gold line " + std::to_string(lineno) +
                               ": gender must be masculine or feminine, got '" +
                               fields[2] + "'");
    rec.domain = fields[3];
    records.push_back(std::move(rec));
  }
  if (in.bad()) throw std::runtime_error("gold read failed");
  return records;
}

const char* to_string(MistakeClass c) {
  switch (c) {
    case MistakeClass::pronoun: return "pronoun";
    case MistakeClass::verb: return "verb";
    case MistakeClass::whitespace_symbol: return "whitespace_symbol";
    case MistakeClass::other: return "other";
  }
  return "unknown";
}

const char* to_string(EditOp op) {
  switch (op) {
    case EditOp::match: return "match";
    case EditOp::substitution: return "substitution";
    case EditOp::deletion: return "deletion";
    case EditOp::insertion: return "insertion";
  }
  return "unknown";
}

}  // namespace gnrw
