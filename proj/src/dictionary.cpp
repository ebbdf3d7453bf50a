#include "hhc/dictionary.hpp"

#include <stdexcept>

#include "hhc/error.hpp"
#include "hhc/wire.hpp"

namespace hhc {

namespace {

constexpr char kDictMagic[5] = "HHD1";

bool usable_pattern(std::string_view token) {
    return token.size() <= 65535 && is_single_token(token);
}

} // namespace

Dictionary::BuildResult Dictionary::build(std::span<const RankedPattern> ranked) {
    BuildResult result;
    auto& dict = result.dictionary;
    dict.entries_.reserve(std::min(ranked.size(), kMaxDictEntries));
    for (const RankedPattern& p : ranked) {
        std::size_t rank = dict.entries_.size();
        if (rank == kMaxDictEntries || !usable_pattern(p.token) ||
            p.token.size() < min_pattern_length_for_rank(rank) ||
            dict.rank_of_.contains(p.token)) {
            ++result.dropped;
            continue;
        }
        dict.rank_of_.emplace(p.token, static_cast<std::uint32_t>(rank));
        dict.entries_.push_back(p.token);
    }
    dict.digest_ = fnv1a64(dict.serialize());
    return result;
}

Bytes Dictionary::serialize() const {
    Bytes out;
    std::size_t size = 8;
    for (const std::string& e : entries_)
        size += 2 + e.size();
    out.reserve(size);
    out.insert(out.end(), kDictMagic, kDictMagic + 4);
    put_u32le(out, static_cast<std::uint32_t>(entries_.size()));
    for (const std::string& e : entries_) {
        put_u16le(out, static_cast<std::uint16_t>(e.size()));
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

Dictionary Dictionary::parse(BytesView blob) {
    WireCursor cur(blob);
    cur.expect_magic(kDictMagic, "dictionary");
    std::uint32_t count = cur.u32le();
    if (count > kMaxDictEntries)
        throw FormatError("dictionary: entry count " + std::to_string(count) +
                          " exceeds " + std::to_string(kMaxDictEntries));

    Dictionary dict;
    dict.entries_.reserve(count);
    dict.rank_of_.reserve(count);
    for (std::uint32_t rank = 0; rank < count; ++rank) {
        std::uint16_t len = cur.u16le();
        BytesView bytes = cur.bytes(len);
        std::string token(as_string_view(bytes));
        if (!is_single_token(token))
            throw FormatError("dictionary: entry " + std::to_string(rank) +
                              " is not a single token");
        if (token.size() < min_pattern_length_for_rank(rank))
            throw FormatError("dictionary: entry " + std::to_string(rank) +
                              " too short for its rank");
        if (dict.rank_of_.contains(token))
            throw FormatError("dictionary: duplicate entry \"" + token + "\"");
        dict.rank_of_.emplace(token, rank);
        dict.entries_.push_back(std::move(token));
    }
    cur.expect_end("dictionary");
    dict.digest_ = fnv1a64(blob);
    return dict;
}

std::string_view Dictionary::pattern_at(std::size_t rank) const {
    if (rank >= entries_.size())
        throw std::out_of_range("dictionary: rank " + std::to_string(rank) +
                                " out of range (size " + std::to_string(entries_.size()) + ")");
    return entries_[rank];
}

std::optional<std::uint32_t> Dictionary::find(std::string_view token) const {
    auto it = rank_of_.find(token);
    if (it == rank_of_.end())
        return std::nullopt;
    return it->second;
}

ReplacementString Dictionary::replacement_for(std::size_t rank) const {
    if (rank >= entries_.size())
        throw std::out_of_range("dictionary: rank " + std::to_string(rank) +
                                " out of range (size " + std::to_string(entries_.size()) + ")");
    return replacement_for_rank(rank);
}

std::uint32_t Dictionary::rank_for(BytesView replacement) const {
    if (replacement.size() < 2 || replacement[0] != kEscapeByte)
        throw FormatError("replacement: missing escape prefix");
    std::size_t rank;
    std::size_t expected_size;
    if (replacement[1] == kLiteralMarker) {
        throw FormatError("replacement: literal-escape pair is not a replacement string");
    } else if (replacement[1] == kWideMarker) {
        if (replacement.size() < 4)
            throw FormatError("replacement: truncated wide form");
        rank = kTwoByteRanks + replacement[2] + (static_cast<std::size_t>(replacement[3]) << 8);
        expected_size = 4;
    } else {
        rank = replacement[1];
        expected_size = 2;
    }
    if (replacement.size() != expected_size)
        throw FormatError("replacement: wrong length");
    if (rank >= entries_.size())
        throw CorruptStreamError("replacement: unknown pattern rank " + std::to_string(rank), 0);
    return static_cast<std::uint32_t>(rank);
}

} // namespace hhc
