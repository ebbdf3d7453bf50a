#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hhc/bytes.hpp"
#include "hhc/miner.hpp"
#include "hhc/replacement.hpp"

namespace hhc {

// Rank-ordered pattern table. Rank i's replacement string is implied by i:
// two bytes for ranks below 254, four bytes above. Every pattern is a
// single token, strictly longer than its replacement, so substitution can
// only shrink the text.
class Dictionary {
public:
    Dictionary() = default;

    struct BuildResult;

    // Consumes select_patterns() output in order. Tokens too short for the
    // next free slot (or otherwise unusable as patterns) are dropped and
    // counted; later tokens shift up.
    static BuildResult build(std::span<const RankedPattern> ranked);

    static Dictionary parse(BytesView blob);  // throws FormatError
    Bytes serialize() const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::uint64_t digest() const { return digest_; }

    std::string_view pattern_at(std::size_t rank) const;  // throws std::out_of_range
    std::optional<std::uint32_t> find(std::string_view token) const;

    ReplacementString replacement_for(std::size_t rank) const;  // throws std::out_of_range
    // Inverse of replacement_for on well-formed escape codes.
    // Throws FormatError on malformed bytes, CorruptStreamError on a rank
    // this dictionary does not hold.
    std::uint32_t rank_for(BytesView replacement) const;

    const std::vector<std::string>& entries() const { return entries_; }

    bool operator==(const Dictionary& other) const { return entries_ == other.entries_; }

private:
    struct TransparentHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::vector<std::string> entries_;
    std::unordered_map<std::string, std::uint32_t, TransparentHash, std::equal_to<>> rank_of_;
    std::uint64_t digest_ = 0;
};

struct Dictionary::BuildResult {
    Dictionary dictionary;
    std::size_t dropped = 0;
};

} // namespace hhc
