#include "gnrw/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace gnrw {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += kGolden;
    return mix64(state);
  }
};

// Uniform double in [0, 1) from the top 53 bits.
double to_unit(std::uint64_t r) {
  return static_cast<double>(r >> 11) * 0x1.0p-53;
}

template <typename T>
void fisher_yates(std::vector<T>& v, SplitMix& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

std::string escape_tsv_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_tsv_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (i + 1 == s.size()) throw std::invalid_argument("dangling backslash");
    switch (s[++i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default:
        throw std::invalid_argument("bad escape \\" + std::string(1, s[i]));
    }
  }
  return out;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

Dataset build_dataset(const std::vector<std::string>& gendered,
                      const std::vector<std::string>& neutral,
                      const Rewriter& rewriter, const DatasetParams& params) {
  if (!(params.ratio > 0.0) || params.ratio > 1.0)
    throw std::invalid_argument("ratio must be in (0, 1]");
  if (params.inflect_fraction < 0.0 || params.inflect_fraction > 1.0)
    throw std::invalid_argument("inflect fraction must be in [0, 1]");
  if (gendered.empty())
    throw std::invalid_argument("gendered input is empty");

  Dataset ds;
  ds.params = params;

  for (std::size_t i = 0; i < gendered.size(); ++i) {
    RewriteTrace trace;
    try {
      trace = rewriter.rewrite(gendered[i]);
    } catch (const std::exception& e) {
      ds.skipped.push_back({i + 1, e.what()});
      continue;
    }
    if (trace.source_gender == GenderScan::masculine)
      ++ds.rewritten_masculine;
    else
      ++ds.rewritten_feminine;
    ds.pairs.push_back({gendered[i], trace.output, Provenance::rewritten,
                        trace.source_gender});

    // Per-line coin, independent of every other line, so inserting a line
    // never flips its neighbours' twins.
    const double coin = to_unit(mix64(params.seed ^ ((i + 1) * kGolden)));
    if (coin < params.inflect_fraction) {
      InflectResult twin;
      try {
        twin = rewriter.inflect_sentence(gendered[i]);
      } catch (const std::exception& e) {
        ds.skipped.push_back({i + 1, std::string("inflection: ") + e.what()});
        continue;
      }
      const GenderScan twin_gender = twin.from == GenderScan::masculine
                                         ? GenderScan::feminine
                                         : GenderScan::masculine;
      if (twin_gender == GenderScan::masculine)
        ++ds.inflected_masculine;
      else
        ++ds.inflected_feminine;
      ds.pairs.push_back(
          {twin.output, trace.output, Provenance::inflected, twin_gender});
    }
  }

  if (ds.pairs.empty())
    throw std::runtime_error("every gendered line was rejected");

  const std::uint64_t rewrites = ds.pairs.size();
  const auto identity_needed = static_cast<std::uint64_t>(std::llround(
      static_cast<double>(rewrites) * (1.0 - params.ratio) / params.ratio));
  if (identity_needed > neutral.size())
    throw std::runtime_error(
        "neutral corpus too small: need " + std::to_string(identity_needed) +
        " identity lines, have " + std::to_string(neutral.size()));
  if (identity_needed > 0) {
    std::vector<std::size_t> order(neutral.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    SplitMix rng(mix64(params.seed + 1));
    fisher_yates(order, rng);
    order.resize(identity_needed);
    // Keep corpus order among the sampled lines.
    std::sort(order.begin(), order.end());
    for (std::size_t idx : order)
      ds.pairs.push_back(
          {neutral[idx], neutral[idx], Provenance::identity, GenderScan::none});
    ds.identity_count = identity_needed;
  }

  SplitMix rng(mix64(params.seed + 2));
  fisher_yates(ds.pairs, rng);
  return ds;
}

void write_pairs_tsv(const std::vector<ParallelPair>& pairs, std::ostream& out) {
  for (const ParallelPair& p : pairs) {
    out << escape_tsv_field(p.source) << '\t' << escape_tsv_field(p.target)
        << '\t' << to_string(p.provenance) << '\n';
  }
  if (!out) throw std::runtime_error("pairs write failed");
}

std::vector<ParallelPair> read_pairs_tsv(std::istream& in) {
  std::vector<ParallelPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos
                                             : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw std::runtime_error("pairs line " + std::to_string(lineno) +
                               ": expected three tab-separated fields");
    ParallelPair p;
    try {
      p.source = unescape_tsv_field(std::string_view(line).substr(0, t1));
      p.target =
          unescape_tsv_field(std::string_view(line).substr(t1 + 1, t2 - t1 - 1));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("pairs line " + std::to_string(lineno) + ": " +
                               e.what());
    }
    std::string prov = line.substr(t2 + 1);
    if (!prov.empty() && prov.back() == '\r') prov.pop_back();
    try {
      p.provenance = provenance_from_string(prov);
    } catch (const std::exception&) {
      throw std::runtime_error("pairs line " + std::to_string(lineno) +
                               ": unknown provenance '" + prov + "'");
    }
    pairs.push_back(std::move(p));
  }
  if (in.bad()) throw std::runtime_error("pairs read failed");
  return pairs;
}

std::string manifest_json(const Dataset& ds) {
  nlohmann::json j;
  j["total"] = ds.pairs.size();
  j["seed"] = ds.params.seed;
  j["ratio"] = ds.params.ratio;
  j["inflect_fraction"] = ds.params.inflect_fraction;
  j["skipped"] = ds.skipped.size();
  j["counts"]["rewritten"]["masculine"] = ds.rewritten_masculine;
  j["counts"]["rewritten"]["feminine"] = ds.rewritten_feminine;
  j["counts"]["inflected"]["masculine"] = ds.inflected_masculine;
  j["counts"]["inflected"]["feminine"] = ds.inflected_feminine;
  j["counts"]["identity"] = ds.identity_count;
  return j.dump(2);
}

std::pair<std::vector<ParallelPair>, std::vector<ParallelPair>> split_dev(
    const std::vector<ParallelPair>& pairs, double dev_fraction,
    std::uint64_t seed) {
  if (dev_fraction < 0.0 || dev_fraction > 1.0)
    throw std::invalid_argument("dev fraction must be in [0, 1]");

  std::vector<bool> in_dev(pairs.size(), false);
  for (int prov = 0; prov < 3; ++prov) {
    // Group this stratum's pairs by source so a duplicated sentence never
    // straddles the split.
    std::vector<std::vector<std::size_t>> groups;
    std::unordered_map<std::string, std::size_t> group_of;
    std::size_t stratum_size = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (static_cast<int>(pairs[i].provenance) != prov) continue;
      ++stratum_size;
      auto [it, fresh] = group_of.try_emplace(pairs[i].source, groups.size());
      if (fresh) groups.emplace_back();
      groups[it->second].push_back(i);
    }
    if (stratum_size == 0) continue;
    std::vector<std::size_t> order(groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    SplitMix rng(mix64(seed + 101 + static_cast<std::uint64_t>(prov)));
    fisher_yates(order, rng);
    const auto want = static_cast<std::size_t>(
        std::llround(static_cast<double>(stratum_size) * dev_fraction));
    std::size_t have = 0;
    for (std::size_t gi : order) {
      if (have >= want) break;
      for (std::size_t idx : groups[gi]) in_dev[idx] = true;
      have += groups[gi].size();
    }
  }

  std::pair<std::vector<ParallelPair>, std::vector<ParallelPair>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    (in_dev[i] ? out.second : out.first).push_back(pairs[i]);
  return out;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::rewritten: return "rewritten";
    case Provenance::inflected: return "inflected";
    case Provenance::identity: return "identity";
  }
  return "unknown";
}

Provenance provenance_from_string(std::string_view name) {
  if (name == "rewritten") return Provenance::rewritten;
  if (name == "inflected") return Provenance::inflected;
  if (name == "identity") return Provenance::identity;
  throw std::invalid_argument("unknown provenance: " + std::string(name));
}

}  // namespace gnrw
