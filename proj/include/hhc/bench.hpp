#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhc/bytes.hpp"
#include "hhc/dictionary.hpp"
#include "hhc/miner.hpp"

namespace hhc {

// Sizes and ratios for one input under the two pipelines. hh is the
// two-level container, ch the huffman-only container, both without an
// embedded dictionary so the comparison carries identical framing.
struct BenchRecord {
    std::uint64_t input_size = 0;
    std::uint64_t hh_size = 0;
    std::uint64_t ch_size = 0;
    std::uint64_t dict_size = 0;
    double perf_hh = 0.0;             // hh_size / input_size
    double perf_ch = 0.0;             // ch_size / input_size
    double compression_ratio = 0.0;   // hh_size / ch_size
    std::optional<std::uint64_t> critical_point;
};

// Throws std::invalid_argument on empty input.
BenchRecord measure(BytesView text, const Dictionary& dict);

// Smallest download count D at which D*hh + dict < D*ch, i.e. the point
// where shipping the dictionary once has paid for itself. Absent when the
// two-level pipeline never wins (ch <= hh).
std::optional<std::uint64_t> critical_point(std::uint64_t dict_size, std::uint64_t hh_size,
                                            std::uint64_t ch_size);

// Synthetic domain corpus: tokens separated by single spaces; each token is
// a keyword (Zipf-weighted by list position, probability keyword_density)
// or a random lowercase filler token of length 2..8. Driven by a
// std::mt19937_64 seeded with `seed`; bounded draws use modulo reduction,
// unit-interval draws use the top 53 bits. Output never exceeds `size` and
// falls short only by less than one token.
struct SynthParams {
    std::size_t size = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> keywords;
    double zipf_s = 1.0;
    double keyword_density = 0.3;

    void validate() const;  // throws std::invalid_argument
};

Bytes gen_synthetic(const SynthParams& params);

// One grid point of the pattern-length / pattern-frequency sweep:
// keyword_count fresh patterns of exactly pattern_len bytes, sampled near
// uniformly, with density chosen so each pattern lands close to
// pattern_freq occurrences. The dictionary is mined back out of the
// generated text, so patterns below the mining thresholds drop out exactly
// as they would in production.
struct SweepPoint {
    std::size_t input_size = 0;
    std::size_t pattern_len = 0;
    std::uint64_t pattern_freq = 0;
};

struct SweepConfig {
    std::uint64_t seed = 1;
    std::size_t keyword_count = 50;
    MiningParams mining{};
};

struct SweepRow {
    SweepPoint point;
    BenchRecord record;
};

std::vector<SweepRow> sweep(const SweepConfig& config, std::span<const SweepPoint> grid);

// CSV emission. Fields without a value (pattern columns for plain file
// benchmarks, absent critical point) are left empty. Floats carry six
// decimal places.
std::string csv_header();
std::string csv_row(const BenchRecord& record, const std::optional<SweepPoint>& point = {});
std::string to_csv(std::span<const SweepRow> rows);

// Domain keyword list used as the default corpus vocabulary; every entry
// is a single token of 4 to 15 bytes.
std::span<const std::string_view> builtin_cs_keywords();

} // namespace hhc
