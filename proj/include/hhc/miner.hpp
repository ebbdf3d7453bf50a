#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hhc/bytes.hpp"
#include "hhc/replacement.hpp"

namespace hhc {

// Replacement-string address space: 254 two-byte slots plus 65536 four-byte
// slots.
constexpr std::size_t kMaxDictEntries = kTwoByteRanks + kFourByteRanks;

enum class Cluster : std::uint8_t {
    InfrequentShort,
    InfrequentLong,
    FrequentShort,
    FrequentLong,
};

struct PatternStats {
    std::string token;
    std::uint64_t count = 0;
    Cluster cluster = Cluster::InfrequentShort;
};

struct MiningParams {
    std::size_t min_length = 3;        // patterns shorter than this are never kept
    std::uint64_t min_frequency = 10;  // patterns rarer than this are never kept
    std::size_t max_entries = kMaxDictEntries;

    void validate() const;  // throws std::invalid_argument
};

struct RankedPattern {
    std::string token;
    std::uint64_t count = 0;

    bool operator==(const RankedPattern&) const = default;
};

using TokenCounts = std::unordered_map<std::string, std::uint64_t>;

// Counts whole-token occurrences across the corpus. The parallel variant
// splits texts at gap boundaries and merges per-thread counts; its result
// is identical to the serial one.
TokenCounts count_tokens(std::span<const BytesView> corpus);
TokenCounts count_tokens_serial(std::span<const BytesView> corpus);

// Labels every counted token with its length/frequency cluster.
// Output is sorted by token bytes so reruns are reproducible.
std::vector<PatternStats> classify(const TokenCounts& counts, const MiningParams& params);

// Keeps the frequent-long tokens, merges in domain keywords (absent
// keywords are given count min_frequency), and ranks by estimated savings
// count * (length - 2), ties broken by count desc then token bytes asc.
// Throws RejectedKeywordError for keywords that cannot be patterns.
std::vector<RankedPattern> select_patterns(std::span<const PatternStats> stats,
                                           std::span<const std::string> keywords,
                                           const MiningParams& params);

// Keyword file contents: one keyword per line; blank lines and lines
// starting with '#' are skipped.
std::vector<std::string> parse_keyword_lines(std::string_view text);

} // namespace hhc
