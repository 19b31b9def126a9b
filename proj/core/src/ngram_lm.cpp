#include "gnrw/ngram_lm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gnrw/token.hpp"

namespace gnrw {
namespace {

constexpr double kLn10 = 2.302585092994045684;
constexpr double kBosLog10 = -99.0;  // sentinel: <s> is never predicted

std::string join(const std::vector<std::string>& words, std::size_t begin,
                 std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out += ' ';
    out += words[begin + i];
  }
  return out;
}

// Splits "a b c" into history "a b" and word "c".
std::pair<std::string_view, std::string_view> split_last(std::string_view key) {
  std::size_t pos = key.rfind(' ');
  if (pos == std::string_view::npos) return {std::string_view{}, key};
  return {key.substr(0, pos), key.substr(pos + 1)};
}

std::string_view drop_first(std::string_view key) {
  std::size_t pos = key.find(' ');
  return pos == std::string_view::npos ? std::string_view{} : key.substr(pos + 1);
}

bool starts_with_bos(std::string_view key) {
  return key == NgramLM::kBos ||
         key.substr(0, 4) == std::string_view("<s> ");
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("bad number in model file: " + std::string(s));
  return v;
}

// Per-history totals and positive-continuation type counts for one count
// table. Counts stay integral, so results do not depend on iteration order.
struct HistoryStats {
  std::unordered_map<std::string, std::uint64_t> total;
  std::unordered_map<std::string, std::uint64_t> types;
};

HistoryStats collect_history_stats(
    const std::unordered_map<std::string, std::uint64_t>& counts) {
  HistoryStats st;
  for (const auto& [key, c] : counts) {
    if (c == 0) continue;
    auto [h, w] = split_last(key);
    std::string hk(h);
    st.total[hk] += c;
    st.types[hk] += 1;
  }
  return st;
}

}  // namespace

NgramLM::NgramLM(Config cfg) : cfg_(cfg) {
  if (cfg_.order < 2 || cfg_.order > 8)
    throw std::invalid_argument("model order must be between 2 and 8");
  if (cfg_.unk_threshold < 1)
    throw std::invalid_argument("unk threshold must be at least 1");
}

std::vector<std::string> NgramLM::text_to_tokens(std::string_view line) {
  TokenizedSentence sent = tokenize(line);
  std::vector<std::string> out;
  out.reserve(sent.tokens.size());
  for (const Token& t : sent.tokens) out.push_back(t.lower);
  return out;
}

void NgramLM::train(const std::vector<std::vector<std::string>>& sentences) {
  if (sentences.empty())
    throw std::invalid_argument("cannot train on an empty corpus");
  const int order = cfg_.order;

  std::unordered_map<std::string, std::uint64_t> freq;
  for (const auto& sent : sentences) {
    for (const auto& tok : sent) {
      if (tok.empty() || tok.find(' ') != std::string::npos ||
          tok.find('\t') != std::string::npos ||
          tok.find('\n') != std::string::npos)
        throw std::invalid_argument("training token contains whitespace");
      if (tok == kBos || tok == kEos || tok == kUnk)
        throw std::invalid_argument("training token collides with reserved symbol: " + tok);
      ++freq[tok];
    }
  }

  vocab_.clear();
  vocab_set_ = {kBos, kEos, kUnk};
  for (const auto& [w, c] : freq)
    if (c >= static_cast<std::uint64_t>(cfg_.unk_threshold)) vocab_set_.insert(w);
  vocab_.assign(vocab_set_.begin(), vocab_set_.end());
  std::sort(vocab_.begin(), vocab_.end());
  const std::size_t V = vocab_.size();

  // Raw k-gram counts over <s> ... </s> padded, <unk>-mapped sequences.
  raw_.assign(order, {});
  for (const auto& sent : sentences) {
    std::vector<std::string> seq;
    seq.reserve(sent.size() + 2);
    seq.push_back(kBos);
    for (const auto& tok : sent)
      seq.push_back(vocab_set_.count(tok) ? tok : kUnk);
    seq.push_back(kEos);
    for (int k = 1; k <= order; ++k)
      for (std::size_t i = 0; i + k <= seq.size(); ++i)
        ++raw_[k - 1][join(seq, i, k)];
  }

  // Lower-order counts: left-extension types, except <s>-initial grams keep
  // raw counts (nothing can precede <s>).
  std::vector<std::unordered_map<std::string, std::uint64_t>> counts(order);
  counts[order - 1] = raw_[order - 1];
  for (int k = 1; k < order; ++k) {
    auto& adj = counts[k - 1];
    for (const auto& [key, c] : raw_[k]) {
      (void)c;
      adj[std::string(drop_first(key))] += 1;
    }
    for (const auto& [key, c] : raw_[k - 1])
      if (starts_with_bos(key)) adj[key] = c;
  }

  tables_.assign(order, {});

  // Unigram distribution, interpolated with the uniform distribution over the
  // prediction vocabulary (everything except <s>).
  HistoryStats uni = collect_history_stats(counts[0]);
  const double uni_total = static_cast<double>(uni.total[""]) -
                           static_cast<double>(counts[0].count(kBos) ? counts[0][kBos] : 0);
  std::uint64_t uni_types = 0;
  for (const auto& [w, c] : counts[0])
    if (w != kBos && c > 0) ++uni_types;
  if (uni_total <= 0) throw std::invalid_argument("degenerate training corpus");
  const double uniform = 1.0 / static_cast<double>(V - 1);

  std::unordered_map<std::string, double> lower_prob;  // linear p at level k-1
  for (const auto& w : vocab_) {
    double p;
    if (w == kBos) {
      p = 0.0;
      tables_[0][w] = {kBosLog10, 0.0};
    } else {
      std::uint64_t c = 0;
      if (auto it = counts[0].find(w); it != counts[0].end()) c = it->second;
      p = (std::max(static_cast<double>(c) - kDiscount, 0.0) +
           kDiscount * static_cast<double>(uni_types) * uniform) /
          uni_total;
      tables_[0][w] = {std::log10(p), 0.0};
    }
    lower_prob[w] = p;
  }

  // Higher levels, bottom-up; each stored probability interpolates with the
  // already-computed next-lower level.
  for (int k = 2; k <= order; ++k) {
    HistoryStats st = collect_history_stats(counts[k - 1]);
    std::unordered_map<std::string, double> level_prob;
    level_prob.reserve(counts[k - 1].size());
    for (const auto& [key, c] : counts[k - 1]) {
      if (c == 0) continue;
      auto [h, w] = split_last(key);
      std::string hk(h);
      const double tot = static_cast<double>(st.total.at(hk));
      const double n1p = static_cast<double>(st.types.at(hk));
      std::string lower_key =
          k == 2 ? std::string(w) : std::string(drop_first(key));
      const double p_low = lower_prob.at(lower_key);
      const double p =
          (std::max(static_cast<double>(c) - kDiscount, 0.0) +
           kDiscount * n1p * p_low) /
          tot;
      level_prob[key] = p;
      tables_[k - 1][key] = {std::log10(p), 0.0};
    }
    // Backoff weights live one level down, on the history grams.
    for (auto& [key, entry] : tables_[k - 2]) {
      auto tot_it = st.total.find(key);
      if (tot_it == st.total.end() || tot_it->second == 0) {
        entry.log10_backoff = 0.0;  // nothing follows; weight one
      } else {
        const double bo = kDiscount *
                          static_cast<double>(st.types.at(key)) /
                          static_cast<double>(tot_it->second);
        entry.log10_backoff = std::log10(bo);
      }
    }
    lower_prob = std::move(level_prob);
  }

  trained_ = true;
}

const std::string& NgramLM::map_word(const std::string& w) const {
  static const std::string unk = kUnk;
  return vocab_set_.count(w) ? w : unk;
}

double NgramLM::score_log10(const std::vector<std::string>& context,
                            const std::string& word) const {
  // ARPA-style: use the longest listed n-gram; otherwise charge the context's
  // backoff weight and retry with a shorter context.
  std::size_t start = 0;
  const std::size_t max_ctx = static_cast<std::size_t>(cfg_.order - 1);
  if (context.size() > max_ctx) start = context.size() - max_ctx;
  double backoff = 0.0;
  while (true) {
    const std::size_t ctx_len = context.size() - start;
    std::string key = join(context, start, ctx_len);
    if (!key.empty()) key += ' ';
    key += word;
    const auto& table = tables_[ctx_len];
    if (auto it = table.find(key); it != table.end())
      return backoff + it->second.log10_prob;
    if (ctx_len == 0) return kBosLog10;  // unreachable after map_word
    const auto& ctx_table = tables_[ctx_len - 1];
    if (auto it = ctx_table.find(join(context, start, ctx_len));
        it != ctx_table.end())
      backoff += it->second.log10_backoff;
    ++start;
  }
}

double NgramLM::log_prob(const std::vector<std::string>& tokens) const {
  if (!trained_) throw std::logic_error("model is not trained");
  std::vector<std::string> seq;
  seq.reserve(tokens.size() + 2);
  seq.push_back(kBos);
  for (const auto& t : tokens) seq.push_back(map_word(t));
  seq.push_back(kEos);
  double lp10 = 0.0;
  std::vector<std::string> ctx;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    ctx.assign(seq.begin(), seq.begin() + i);
    lp10 += score_log10(ctx, seq[i]);
  }
  return lp10 * kLn10;
}

double NgramLM::perplexity(const std::vector<std::string>& tokens) const {
  if (tokens.empty())
    throw std::invalid_argument("cannot take the perplexity of an empty sentence");
  const double lp = log_prob(tokens);
  const double t = static_cast<double>(tokens.size() + 1);
  return std::exp(-lp / t);
}

double NgramLM::cond_prob(const std::vector<std::string>& context,
                          const std::string& word) const {
  if (!trained_) throw std::logic_error("model is not trained");
  std::vector<std::string> ctx;
  ctx.reserve(context.size());
  for (const auto& c : context) ctx.push_back(map_word(c));
  return std::pow(10.0, score_log10(ctx, map_word(word)));
}

std::uint64_t NgramLM::raw_count(const std::vector<std::string>& gram) const {
  if (gram.empty() || gram.size() > static_cast<std::size_t>(cfg_.order) ||
      raw_.empty())
    return 0;
  const auto& table = raw_[gram.size() - 1];
  auto it = table.find(join(gram, 0, gram.size()));
  return it == table.end() ? 0 : it->second;
}

std::size_t NgramLM::distinct_grams(int k) const {
  if (k < 1 || k > cfg_.order || raw_.empty()) return 0;
  return raw_[k - 1].size();
}

void NgramLM::save(std::ostream& out) const {
  if (!trained_) throw std::logic_error("model is not trained");
  out << "NNLM v1 order=" << cfg_.order << " vocab=" << vocab_.size() << "\n";
  for (int k = 1; k <= cfg_.order; ++k) {
    std::vector<const std::string*> keys;
    keys.reserve(tables_[k - 1].size());
    for (const auto& [key, entry] : tables_[k - 1]) keys.push_back(&key);
    std::sort(keys.begin(), keys.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    out << "\\" << k << "-grams: " << keys.size() << "\n";
    for (const std::string* key : keys) {
      const Entry& e = tables_[k - 1].at(*key);
      out << format_double(e.log10_prob) << '\t' << *key;
      if (k < cfg_.order) out << '\t' << format_double(e.log10_backoff);
      out << "\n";
    }
  }
  out << "\\end\\\n";
  if (!out) throw std::runtime_error("model write failed");
}

void NgramLM::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open model file for writing: " + path.string());
  save(out);
}

NgramLM NgramLM::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty model file");
  int order = 0;
  std::size_t vocab = 0;
  {
    std::istringstream hdr(line);
    std::string magic, version, field;
    hdr >> magic >> version;
    if (magic != "NNLM" || version != "v1")
      throw std::runtime_error("not a model file (expected NNLM v1 header): " +
                               line);
    while (hdr >> field) {
      if (field.rfind("order=", 0) == 0)
        order = std::stoi(field.substr(6));
      else if (field.rfind("vocab=", 0) == 0)
        vocab = static_cast<std::size_t>(std::stoull(field.substr(6)));
    }
  }
  if (order < 2 || order > 8)
    throw std::runtime_error("model file has unsupported order");
  NgramLM lm(Config{order, 1});
  lm.tables_.assign(order, {});
  for (int k = 1; k <= order; ++k) {
    if (!std::getline(in, line))
      throw std::runtime_error("model file truncated before " +
                               std::to_string(k) + "-gram section");
    std::string expect = "\\" + std::to_string(k) + "-grams: ";
    if (line.rfind(expect, 0) != 0)
      throw std::runtime_error("bad section header: " + line);
    const std::size_t n = std::stoull(line.substr(expect.size()));
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::getline(in, line))
        throw std::runtime_error("model file truncated inside " +
                                 std::to_string(k) + "-gram section");
      std::size_t t1 = line.find('\t');
      if (t1 == std::string::npos)
        throw std::runtime_error("bad model line: " + line);
      std::size_t t2 = k < order ? line.find('\t', t1 + 1) : std::string::npos;
      Entry e;
      e.log10_prob = parse_double(std::string_view(line).substr(0, t1));
      std::string key;
      if (t2 == std::string::npos) {
        key = line.substr(t1 + 1);
      } else {
        key = line.substr(t1 + 1, t2 - t1 - 1);
        e.log10_backoff = parse_double(std::string_view(line).substr(t2 + 1));
      }
      if (key.empty()) throw std::runtime_error("bad model line: " + line);
      lm.tables_[k - 1].emplace(std::move(key), e);
    }
  }
  if (!std::getline(in, line) || line != "\\end\\")
    throw std::runtime_error("model file missing end marker");
  for (const auto& [w, e] : lm.tables_[0]) {
    (void)e;
    lm.vocab_set_.insert(w);
  }
  lm.vocab_.assign(lm.vocab_set_.begin(), lm.vocab_set_.end());
  std::sort(lm.vocab_.begin(), lm.vocab_.end());
  if (vocab != 0 && vocab != lm.vocab_.size())
    throw std::runtime_error("model vocab count disagrees with unigram section");
  lm.trained_ = true;
  return lm;
}

NgramLM NgramLM::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path.string());
  return load(in);
}

}  // namespace gnrw
