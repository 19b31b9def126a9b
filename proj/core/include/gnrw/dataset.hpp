#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gnrw/filter.hpp"
#include "gnrw/rewriter.hpp"

namespace gnrw {

enum class Provenance { rewritten, inflected, identity };

struct ParallelPair {
  std::string source;
  std::string target;
  Provenance provenance = Provenance::rewritten;
  GenderScan source_gender = GenderScan::none;  // none for identity pairs
};

struct DatasetParams {
  std::uint64_t seed = 0;
  double ratio = 0.7;             // share of pairs that actually rewrite
  double inflect_fraction = 0.5;  // chance a line also yields its gender twin
};

struct SkippedLine {
  std::size_t line = 0;  // 1-based index into the gendered input
  std::string reason;
};

struct Dataset {
  std::vector<ParallelPair> pairs;  // in final shuffled order
  DatasetParams params;
  std::vector<SkippedLine> skipped;
  std::uint64_t rewritten_masculine = 0;
  std::uint64_t rewritten_feminine = 0;
  std::uint64_t inflected_masculine = 0;
  std::uint64_t inflected_feminine = 0;
  std::uint64_t identity_count = 0;
};

// Builds the parallel corpus: every gendered line becomes a (source ->
// rewritten) pair, a seeded per-line coin adds an opposite-gender twin with
// the same target, and identity pairs drawn from the neutral lines pad the
// mix so rewrites make up `ratio` of the total. Lines the rewriter rejects
// are recorded in `skipped`, not fatal. The result order comes from a seeded
// shuffle; everything is deterministic in (inputs, seed).
// Throws std::invalid_argument for bad params or an empty gendered input and
// std::runtime_error when the neutral corpus cannot supply enough identity
// lines (the message names the required count).
Dataset build_dataset(const std::vector<std::string>& gendered,
                      const std::vector<std::string>& neutral,
                      const Rewriter& rewriter, const DatasetParams& params);

// Tab-separated "source<TAB>target<TAB>provenance" with \\, \t, \n, \r
// backslash-escaped inside fields. read_pairs_tsv does not recover
// source_gender (the manifest carries the per-gender counts).
void write_pairs_tsv(const std::vector<ParallelPair>& pairs, std::ostream& out);
std::vector<ParallelPair> read_pairs_tsv(std::istream& in);

std::string manifest_json(const Dataset& dataset);  // pretty-printed

// Deterministic train/dev split, stratified by provenance. Pairs sharing a
// source string always land on the same side; with unique sources each dev
// stratum is within one pair of stratum_size * dev_fraction. Relative input
// order is preserved on both sides.
std::pair<std::vector<ParallelPair>, std::vector<ParallelPair>> split_dev(
    const std::vector<ParallelPair>& pairs, double dev_fraction,
    std::uint64_t seed);

// splitmix64 mixer; the seeded RNG behind every sampling decision here.
std::uint64_t mix64(std::uint64_t x);

// Field escaping shared by the tab-separated formats: \\, \t, \n, \r.
// unescape throws std::invalid_argument on a dangling or unknown escape.
std::string escape_tsv_field(std::string_view s);
std::string unescape_tsv_field(std::string_view s);

const char* to_string(Provenance p);
Provenance provenance_from_string(std::string_view name);

}  // namespace gnrw
