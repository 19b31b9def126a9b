// gnrw — command-line front end for the gender-neutral rewriting toolkit.
//
// Subcommands cover the whole pipeline: filter a corpus into gendered and
// neutral streams, train the ranking language model, rewrite or inflect
// sentences, assemble a parallel dataset, and score hypotheses against
// references. Every subcommand accepts "-" for stdin/stdout wherever a path
// is expected, and all outputs are deterministic given the same inputs and
// seed.
//
// Exit codes: 0 success, 1 usage or validation error, 2 I/O error,
// 3 rejection rate above --fail-threshold.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gnrw/dataset.hpp"
#include "gnrw/filter.hpp"
#include "gnrw/lexicon.hpp"
#include "gnrw/metrics.hpp"
#include "gnrw/ngram_lm.hpp"
#include "gnrw/rewriter.hpp"
#include "gnrw/token.hpp"
#include "gnrw/verb_lexicon.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFailThreshold = 3;

// Errors of the "could not open/read/write" kind; everything else that
// escapes a subcommand counts as a validation problem.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InStream {
 public:
  explicit InStream(const std::string& path) {
    if (path == "-") {
      stream_ = &std::cin;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open for reading: " + path);
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

class OutStream {
 public:
  explicit OutStream(const std::string& path) : path_(path) {
    if (path == "-") {
      stream_ = &std::cout;
      return;
    }
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw IoError("cannot open for writing: " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }
  // Flush and surface any write failure; call once after the last write.
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed: " + path_);
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

class NullBuffer : public std::streambuf {
 protected:
  int overflow(int c) override { return c; }
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Options shared by several subcommands; mirrors the dump-config output.
struct CommonConfig {
  std::string lexicon_path;
  std::string verbs_path;
  std::string reflexive_style = "themselves";
  std::string model_path;
  int order = 3;
  int unk_threshold = 2;
  std::uint64_t seed = 0;
  double ratio = 0.7;
  double inflect_fraction = 0.5;
  std::string in_path = "-";
  std::string out_path = "-";
  unsigned jobs = 1;
};

void add_lexicon_options(CLI::App& cmd, CommonConfig& cfg) {
  cmd.add_option("--lexicon", cfg.lexicon_path,
                 "pronoun/noun mapping file extending the built-in table");
  cmd.add_option("--verbs", cfg.verbs_path,
                 "verb conjugation table replacing the built-in one");
  cmd.add_option("--reflexive-style", cfg.reflexive_style,
                 "neutral reflexive form (themselves|themself)")
      ->check(CLI::IsMember({"themselves", "themself"}));
}

gnrw::Lexicon make_lexicon(const CommonConfig& cfg) {
  auto style = cfg.reflexive_style == "themself"
                   ? gnrw::ReflexiveStyle::themself
                   : gnrw::ReflexiveStyle::themselves;
  gnrw::Lexicon lex = gnrw::builtin_lexicon(style);
  if (!cfg.lexicon_path.empty()) {
    InStream in(cfg.lexicon_path);
    lex = gnrw::load_lexicon(in.get(), std::move(lex));
  }
  return lex;
}

gnrw::VerbLexicon make_verbs(const CommonConfig& cfg) {
  if (cfg.verbs_path.empty()) return gnrw::builtin_verb_lexicon();
  InStream in(cfg.verbs_path);
  return gnrw::load_verb_lexicon(in.get());
}

std::optional<gnrw::NgramLM> load_model(const CommonConfig& cfg) {
  if (cfg.model_path.empty()) return std::nullopt;
  InStream in(cfg.model_path);
  return gnrw::NgramLM::load(in.get());
}

// ---------------------------------------------------------------- filter --

int run_filter(const CommonConfig& cfg, const std::string& gendered_path,
               const std::string& neutral_path, bool stats_only) {
  if (!stats_only && (gendered_path.empty() || neutral_path.empty())) {
    std::cerr << "gnrw filter: GENDERED_OUT and NEUTRAL_OUT are required "
                 "unless --stats-only is given\n";
    return kExitUsage;
  }
  gnrw::Lexicon lex = make_lexicon(cfg);
  InStream in(cfg.in_path);
  gnrw::FilterStats stats;
  if (stats_only) {
    NullBuffer null_buf;
    std::ostream null1(&null_buf), null2(&null_buf);
    stats = gnrw::filter_corpus(in.get(), lex, null1, null2);
  } else {
    OutStream gendered(gendered_path);
    OutStream neutral(neutral_path);
    stats = gnrw::filter_corpus(in.get(), lex, gendered.get(), neutral.get());
    gendered.finish();
    neutral.finish();
  }
  nlohmann::ordered_json j{{"total", stats.total},
                           {"kept_masculine", stats.kept_masculine},
                           {"kept_feminine", stats.kept_feminine},
                           {"dropped_mixed", stats.dropped_mixed},
                           {"dropped_neutral", stats.dropped_neutral}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- train-lm --

int run_train_lm(const CommonConfig& cfg) {
  gnrw::NgramLM lm(gnrw::NgramLM::Config{cfg.order, cfg.unk_threshold});
  std::vector<std::vector<std::string>> sentences;
  {
    InStream in(cfg.in_path);
    std::string line;
    while (std::getline(in.get(), line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto tokens = gnrw::NgramLM::text_to_tokens(line);
      if (!tokens.empty()) sentences.push_back(std::move(tokens));
    }
  }
  lm.train(sentences);
  OutStream out(cfg.out_path);
  lm.save(out.get());
  out.finish();
  std::cerr << "trained order-" << cfg.order << " model on "
            << sentences.size() << " sentences, vocabulary "
            << lm.vocab().size() << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- rewrite --

int run_rewrite(const CommonConfig& cfg, const std::string& trace_path,
                std::string rejected_path, double fail_threshold,
                bool bypass) {
  gnrw::Lexicon lex = make_lexicon(cfg);
  gnrw::VerbLexicon verbs = make_verbs(cfg);
  std::optional<gnrw::NgramLM> model = load_model(cfg);
  gnrw::Rewriter rewriter(lex, verbs, model ? &*model : nullptr);

  std::vector<std::string> lines;
  {
    InStream in(cfg.in_path);
    lines = read_lines(in.get());
  }
  gnrw::RewriteOptions options;
  options.bypass_gender_check = bypass;
  auto items = rewriter.rewrite_batch(lines, options, cfg.jobs);

  std::size_t accepted = 0;
  {
    OutStream out(cfg.out_path);
    for (const auto& item : items) {
      if (item.ok) {
        out.get() << item.trace.output << "\n";
        ++accepted;
      }
    }
    out.finish();
  }
  std::size_t rejected = items.size() - accepted;

  if (!trace_path.empty()) {
    OutStream trace(trace_path);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].ok) {
        trace.get() << gnrw::trace_to_json(items[i].trace) << "\n";
      } else {
        nlohmann::ordered_json j{
            {"line", i + 1}, {"source", lines[i]}, {"error", items[i].error}};
        trace.get() << j.dump() << "\n";
      }
    }
    trace.finish();
  }

  if (rejected > 0) {
    if (rejected_path.empty() && cfg.out_path != "-")
      rejected_path = cfg.out_path + ".rejected";
    if (!rejected_path.empty()) {
      OutStream rej(rejected_path);
      for (std::size_t i = 0; i < items.size(); ++i)
        if (!items[i].ok) rej.get() << lines[i] << "\n";
      rej.finish();
    }
  }

  std::cerr << "rewrote " << accepted << " of " << items.size() << " lines ("
            << rejected << " rejected)\n";
  if (!items.empty() && accepted == 0) {
    std::cerr << "gnrw rewrite: all lines rejected\n";
    return kExitUsage;
  }
  if (!items.empty() &&
      static_cast<double>(rejected) >
          fail_threshold * static_cast<double>(items.size())) {
    std::cerr << "gnrw rewrite: rejection rate above --fail-threshold\n";
    return kExitFailThreshold;
  }
  return kExitOk;
}

// --------------------------------------------------------------- inflect --

int run_inflect(const CommonConfig& cfg, const std::string& to) {
  gnrw::Lexicon lex = make_lexicon(cfg);
  gnrw::VerbLexicon verbs = make_verbs(cfg);
  std::optional<gnrw::NgramLM> model = load_model(cfg);
  gnrw::Rewriter rewriter(lex, verbs, model ? &*model : nullptr);
  gnrw::GenderScan target = to == "masculine" ? gnrw::GenderScan::masculine
                                              : gnrw::GenderScan::feminine;

  std::vector<std::string> lines;
  {
    InStream in(cfg.in_path);
    lines = read_lines(in.get());
  }
  std::size_t accepted = 0, skipped = 0;
  OutStream out(cfg.out_path);
  for (const auto& line : lines) {
    gnrw::GenderScan scan = gnrw::detect_gender(line, lex);
    if (scan == target) {
      out.get() << line << "\n";  // already in the requested gender
      ++accepted;
      continue;
    }
    try {
      out.get() << rewriter.inflect_sentence(line).output << "\n";
      ++accepted;
    } catch (const gnrw::RewriteError& e) {
      ++skipped;
      std::cerr << "skipped: " << e.what() << "\n";
    }
  }
  out.finish();
  std::cerr << "inflected " << accepted << " of " << lines.size()
            << " lines to " << to << " (" << skipped << " skipped)\n";
  if (!lines.empty() && accepted == 0) {
    std::cerr << "gnrw inflect: all lines skipped\n";
    return kExitUsage;
  }
  return kExitOk;
}

// --------------------------------------------------------- build-dataset --

int run_build_dataset(const CommonConfig& cfg, const std::string& gendered,
                      const std::string& neutral,
                      const std::string& manifest_path, double dev_fraction,
                      const std::string& dev_path) {
  gnrw::Lexicon lex = make_lexicon(cfg);
  gnrw::VerbLexicon verbs = make_verbs(cfg);
  std::optional<gnrw::NgramLM> model = load_model(cfg);
  gnrw::Rewriter rewriter(lex, verbs, model ? &*model : nullptr);

  std::vector<std::string> gendered_lines, neutral_lines;
  {
    InStream g(gendered);
    gendered_lines = read_lines(g.get());
  }
  {
    InStream n(neutral);
    neutral_lines = read_lines(n.get());
  }
  gnrw::DatasetParams params;
  params.seed = cfg.seed;
  params.ratio = cfg.ratio;
  params.inflect_fraction = cfg.inflect_fraction;
  gnrw::Dataset ds =
      gnrw::build_dataset(gendered_lines, neutral_lines, rewriter, params);

  if (dev_fraction > 0.0) {
    auto [train, dev] = gnrw::split_dev(ds.pairs, dev_fraction, cfg.seed);
    OutStream out(cfg.out_path);
    gnrw::write_pairs_tsv(train, out.get());
    out.finish();
    OutStream dout(dev_path);
    gnrw::write_pairs_tsv(dev, dout.get());
    dout.finish();
  } else {
    OutStream out(cfg.out_path);
    gnrw::write_pairs_tsv(ds.pairs, out.get());
    out.finish();
  }

  std::string manifest = gnrw::manifest_json(ds);
  if (manifest_path.empty()) {
    std::cout << manifest << "\n";
  } else {
    OutStream m(manifest_path);
    m.get() << manifest << "\n";
    m.finish();
  }
  std::cerr << "dataset: " << ds.pairs.size() << " pairs ("
            << ds.skipped.size() << " gendered lines skipped)\n";
  return kExitOk;
}

// -------------------------------------------------------------- evaluate --

gnrw::GenderScan parse_gender(std::string_view s, std::size_t line_no) {
  if (s == "masculine" || s == "m") return gnrw::GenderScan::masculine;
  if (s == "feminine" || s == "f") return gnrw::GenderScan::feminine;
  if (s == "none" || s == "neutral" || s.empty()) return gnrw::GenderScan::none;
  if (s == "mixed") return gnrw::GenderScan::mixed;
  throw std::invalid_argument("line " + std::to_string(line_no) +
                              ": unknown gender label: " + std::string(s));
}

std::vector<gnrw::EvalRecord> read_eval_tsv(std::istream& in) {
  std::vector<gnrw::EvalRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 5)
      throw std::invalid_argument(
          "line " + std::to_string(line_no) +
          ": expected 5 tab-separated fields (source, reference, hypothesis, "
          "gender, domain), got " +
          std::to_string(fields.size()));
    gnrw::EvalRecord rec;
    // fields[0] is the source sentence; evaluation only needs the rest.
    rec.reference = gnrw::unescape_tsv_field(fields[1]);
    rec.hypothesis = gnrw::unescape_tsv_field(fields[2]);
    rec.gender = parse_gender(fields[3], line_no);
    rec.domain = gnrw::unescape_tsv_field(fields[4]);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<gnrw::EvalRecord> read_eval_jsonl(std::istream& in) {
  std::vector<gnrw::EvalRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": invalid JSON");
    gnrw::EvalRecord rec;
    rec.reference = j.at("reference").get<std::string>();
    rec.hypothesis = j.at("hypothesis").get<std::string>();
    rec.gender =
        parse_gender(j.value("gender", std::string("none")), line_no);
    rec.domain = j.value("domain", std::string());
    records.push_back(std::move(rec));
  }
  return records;
}

int run_evaluate(const CommonConfig& cfg, const std::string& format,
                 bool smoothed) {
  gnrw::Lexicon lex = make_lexicon(cfg);
  gnrw::VerbLexicon verbs = make_verbs(cfg);
  std::vector<gnrw::EvalRecord> records;
  {
    InStream in(cfg.in_path);
    records = format == "jsonl" ? read_eval_jsonl(in.get())
                                : read_eval_tsv(in.get());
  }
  gnrw::BleuOptions bleu;
  bleu.smoothed = smoothed;
  gnrw::EvalReport report = gnrw::evaluate(records, lex, verbs, bleu);
  OutStream out(cfg.out_path);
  out.get() << gnrw::report_json(report) << "\n";
  out.finish();
  return kExitOk;
}

// ----------------------------------------------------------- dump-config --

int run_dump_config(const CommonConfig& cfg) {
  nlohmann::ordered_json j{{"lexicon", cfg.lexicon_path},
                           {"verbs", cfg.verbs_path},
                           {"reflexive_style", cfg.reflexive_style},
                           {"model", cfg.model_path},
                           {"order", cfg.order},
                           {"unk_threshold", cfg.unk_threshold},
                           {"seed", cfg.seed},
                           {"ratio", cfg.ratio},
                           {"inflect_fraction", cfg.inflect_fraction},
                           {"in", cfg.in_path},
                           {"out", cfg.out_path},
                           {"jobs", cfg.jobs}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gender-neutral rewriting toolkit"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // filter -------------------------------------------------------------
  CommonConfig filter_cfg;
  std::string filter_gendered, filter_neutral;
  bool stats_only = false;
  auto* filter = app.add_subcommand(
      "filter", "split a corpus into single-gender and neutral streams");
  filter->add_option("input", filter_cfg.in_path, "corpus, one sentence per line (default stdin)");
  filter->add_option("gendered_out", filter_gendered, "output for single-gender lines");
  filter->add_option("neutral_out", filter_neutral, "output for pronoun-free lines");
  filter->add_flag("--stats-only", stats_only, "print stats without writing outputs");
  add_lexicon_options(*filter, filter_cfg);
  filter->callback([&] {
    rc = run_filter(filter_cfg, filter_gendered, filter_neutral, stats_only);
  });

  // train-lm -----------------------------------------------------------
  CommonConfig train_cfg;
  auto* train = app.add_subcommand(
      "train-lm", "train the candidate-ranking n-gram language model");
  train->add_option("corpus", train_cfg.in_path, "training text, one sentence per line (default stdin)");
  train->add_option("-o,--out", train_cfg.out_path, "model file to write")->required();
  train->add_option("--order", train_cfg.order, "n-gram order (2-8, default 3)")
      ->check(CLI::Range(2, 8));
  train->add_option("--unk-threshold", train_cfg.unk_threshold,
                    "words seen fewer times than this become <unk> (default 2)")
      ->check(CLI::Range(1, 1 << 20));
  train->callback([&] { rc = run_train_lm(train_cfg); });

  // rewrite ------------------------------------------------------------
  CommonConfig rw_cfg;
  std::string rw_trace, rw_rejected;
  double rw_fail_threshold = 1.0;
  bool rw_bypass = false;
  auto* rewrite = app.add_subcommand(
      "rewrite", "rewrite single-gender sentences into singular-they form");
  rewrite->add_option("input", rw_cfg.in_path, "sentences to rewrite (default stdin)");
  rewrite->add_option("-o,--out", rw_cfg.out_path, "rewritten sentences (default stdout)");
  rewrite->add_option("--model", rw_cfg.model_path,
                      "language model for ambiguous pronouns (first listed "
                      "alternative wins without one)");
  rewrite->add_option("--trace", rw_trace, "JSONL trace, one object per input line");
  rewrite->add_option("--rejected", rw_rejected,
                      "file for rejected lines (default OUT.rejected)");
  rewrite->add_option("--jobs", rw_cfg.jobs, "worker threads, output order preserved (default 1)")
      ->check(CLI::Range(1, 1024));
  rewrite->add_option("--fail-threshold", rw_fail_threshold,
                      "exit 3 when the rejected fraction exceeds this (default 1.0)")
      ->check(CLI::Range(0.0, 1.0));
  rewrite->add_flag("--bypass-gender-check", rw_bypass,
                    "rewrite gendered tokens even in mixed or neutral sentences");
  add_lexicon_options(*rewrite, rw_cfg);
  rewrite->callback([&] {
    rc = run_rewrite(rw_cfg, rw_trace, rw_rejected, rw_fail_threshold,
                     rw_bypass);
  });

  // inflect ------------------------------------------------------------
  CommonConfig inf_cfg;
  std::string inf_to;
  auto* inflect = app.add_subcommand(
      "inflect", "swap single-gender sentences to the requested gender");
  inflect->add_option("input", inf_cfg.in_path, "sentences to inflect (default stdin)");
  inflect->add_option("-o,--out", inf_cfg.out_path, "inflected sentences (default stdout)");
  inflect->add_option("--to", inf_to, "target gender (masculine|feminine)")
      ->required()
      ->check(CLI::IsMember({"masculine", "feminine"}));
  inflect->add_option("--model", inf_cfg.model_path,
                      "language model used to resolve ambiguous pronouns");
  add_lexicon_options(*inflect, inf_cfg);
  inflect->callback([&] { rc = run_inflect(inf_cfg, inf_to); });

  // build-dataset --------------------------------------------------------
  CommonConfig ds_cfg;
  std::string ds_gendered, ds_neutral, ds_manifest, ds_dev_out;
  double ds_dev_fraction = 0.0;
  auto* dataset = app.add_subcommand(
      "build-dataset", "assemble a parallel gendered-to-neutral training set");
  dataset->add_option("--gendered", ds_gendered, "single-gender sentences (filter output)")
      ->required();
  dataset->add_option("--neutral", ds_neutral, "pronoun-free sentences for identity pairs")
      ->required();
  dataset->add_option("-o,--out", ds_cfg.out_path, "pairs TSV (default stdout)");
  dataset->add_option("--manifest", ds_manifest,
                      "manifest JSON file (printed to stdout when omitted)");
  dataset->add_option("--model", ds_cfg.model_path, "language model for the rewriter");
  dataset->add_option("--seed", ds_cfg.seed, "RNG seed (default 0)");
  dataset->add_option("--ratio", ds_cfg.ratio,
                      "share of pairs that actually rewrite (default 0.7)")
      ->check(CLI::Range(0.0, 1.0));
  dataset->add_option("--inflect-fraction", ds_cfg.inflect_fraction,
                      "chance a line also yields its opposite-gender twin (default 0.5)")
      ->check(CLI::Range(0.0, 1.0));
  dataset->add_option("--dev-fraction", ds_dev_fraction,
                      "hold out this share as a dev split (default 0 = no split)")
      ->check(CLI::Range(0.0, 0.5));
  dataset->add_option("--dev-out", ds_dev_out, "dev split TSV (required with --dev-fraction)");
  add_lexicon_options(*dataset, ds_cfg);
  dataset->callback([&] {
    if (ds_dev_fraction > 0.0 && ds_dev_out.empty()) {
      std::cerr << "gnrw build-dataset: --dev-fraction requires --dev-out\n";
      rc = kExitUsage;
      return;
    }
    rc = run_build_dataset(ds_cfg, ds_gendered, ds_neutral, ds_manifest,
                           ds_dev_fraction, ds_dev_out);
  });

  // evaluate -----------------------------------------------------------
  CommonConfig ev_cfg;
  std::string ev_format = "tsv";
  bool ev_smoothed = false;
  auto* evaluate = app.add_subcommand(
      "evaluate", "score hypotheses against references (BLEU, WER, mistakes)");
  evaluate->add_option("input", ev_cfg.in_path,
                       "records: source, reference, hypothesis, gender, domain "
                       "(default stdin)");
  evaluate->add_option("-o,--out", ev_cfg.out_path, "report JSON (default stdout)");
  evaluate->add_option("--format", ev_format, "input format (tsv|jsonl, default tsv)")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  evaluate->add_flag("--smoothed", ev_smoothed, "add-one smoothing on the BLEU n>1 precisions");
  add_lexicon_options(*evaluate, ev_cfg);
  evaluate->callback([&] { rc = run_evaluate(ev_cfg, ev_format, ev_smoothed); });

  // dump-config ----------------------------------------------------------
  CommonConfig dump_cfg;
  auto* dump = app.add_subcommand(
      "dump-config", "print the effective configuration as JSON");
  add_lexicon_options(*dump, dump_cfg);
  dump->add_option("--model", dump_cfg.model_path, "language model path");
  dump->add_option("--order", dump_cfg.order, "n-gram order")->check(CLI::Range(2, 8));
  dump->add_option("--unk-threshold", dump_cfg.unk_threshold, "rare-word cutoff")
      ->check(CLI::Range(1, 1 << 20));
  dump->add_option("--seed", dump_cfg.seed, "RNG seed");
  dump->add_option("--ratio", dump_cfg.ratio, "rewrite share")->check(CLI::Range(0.0, 1.0));
  dump->add_option("--inflect-fraction", dump_cfg.inflect_fraction, "gender-twin chance")
      ->check(CLI::Range(0.0, 1.0));
  dump->add_option("--in", dump_cfg.in_path, "input path");
  dump->add_option("--out", dump_cfg.out_path, "output path");
  dump->add_option("--jobs", dump_cfg.jobs, "worker threads")->check(CLI::Range(1, 1024));
  dump->callback([&] { rc = run_dump_config(dump_cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "gnrw: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "gnrw: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
