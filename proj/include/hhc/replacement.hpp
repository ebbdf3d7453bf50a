#pragma once

#include <array>
#include <cstdint>

#include "hhc/bytes.hpp"

namespace hhc {

// Replacement strings are escape-coded:
//   [0x1B, b]            b in 0x00..0xFD    -> rank b          (two bytes)
//   [0x1B, 0xFE, lo, hi]                    -> rank 254+hi*256+lo (four bytes)
//   [0x1B, 0xFF]                            -> a literal 0x1B byte, not a rank
constexpr std::uint8_t kEscapeByte = 0x1B;
constexpr std::uint8_t kWideMarker = 0xFE;
constexpr std::uint8_t kLiteralMarker = 0xFF;

constexpr std::size_t kTwoByteRanks = 254;
constexpr std::size_t kFourByteRanks = 65536;

struct ReplacementString {
    std::array<std::uint8_t, 4> bytes{};
    std::uint8_t size = 0;

    BytesView view() const { return {bytes.data(), size}; }

    bool operator==(const ReplacementString&) const = default;
};

// rank must be below kTwoByteRanks + kFourByteRanks.
constexpr ReplacementString replacement_for_rank(std::size_t rank) {
    ReplacementString r;
    r.bytes[0] = kEscapeByte;
    if (rank < kTwoByteRanks) {
        r.bytes[1] = static_cast<std::uint8_t>(rank);
        r.size = 2;
    } else {
        std::size_t wide = rank - kTwoByteRanks;
        r.bytes[1] = kWideMarker;
        r.bytes[2] = static_cast<std::uint8_t>(wide & 0xFF);
        r.bytes[3] = static_cast<std::uint8_t>(wide >> 8);
        r.size = 4;
    }
    return r;
}

// Minimum pattern length for a slot: a replacement must be strictly shorter
// than the pattern it stands for.
constexpr std::size_t min_pattern_length_for_rank(std::size_t rank) {
    return rank < kTwoByteRanks ? 3 : 5;
}

} // namespace hhc
