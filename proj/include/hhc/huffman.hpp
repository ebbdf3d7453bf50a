#pragma once

#include <array>
#include <cstdint>

#include "hhc/bytes.hpp"
#include "hhc/wire.hpp"

namespace hhc {

struct FrequencyTable {
    std::array<std::uint64_t, 256> counts{};

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (std::uint64_t c : counts)
            t += c;
        return t;
    }

    bool operator==(const FrequencyTable&) const = default;
};

FrequencyTable histogram(BytesView data);  // parallel for large inputs
FrequencyTable histogram_serial(BytesView data);

// Canonical Huffman code over byte symbols. lengths[s] == 0 means s has no
// codeword. Codewords are fully determined by the lengths: present symbols
// sorted by (length, symbol value) receive consecutive code values.
struct CodeBook {
    std::array<std::uint8_t, 256> lengths{};
    std::array<std::uint64_t, 256> codes{};

    std::size_t present_symbols() const {
        std::size_t n = 0;
        for (std::uint8_t l : lengths)
            n += l != 0;
        return n;
    }

    std::uint8_t max_length() const {
        std::uint8_t m = 0;
        for (std::uint8_t l : lengths)
            m = std::max(m, l);
        return m;
    }

    bool operator==(const CodeBook&) const = default;
};

// Optimal prefix code lengths via a min-heap ordered by (weight, smallest
// contained symbol), then canonical codeword assignment. A lone present
// symbol gets a 1-bit code; an all-zero table yields an empty book.
CodeBook build_codebook(const FrequencyTable& freqs);

struct EncodedStream {
    Bytes bits;                     // MSB-first packed, final byte zero-padded
    std::uint64_t symbol_count = 0;
};

// Throws CoverageError if data contains a symbol with no codeword.
// The parallel variant produces the same bytes as the serial one.
EncodedStream huffman_encode(BytesView data, const CodeBook& book);
EncodedStream huffman_encode_serial(BytesView data, const CodeBook& book);

// Decodes exactly symbol_count symbols and verifies that nothing but zero
// padding (within the final byte) remains. Throws TruncationError if the
// stream is too short, FormatError on trailing garbage, CorruptStreamError
// on a bit sequence that is no codeword.
Bytes huffman_decode(BytesView bits, const CodeBook& book, std::uint64_t symbol_count);

// Wire format: u16le count, then (u8 symbol, u8 length) pairs sorted by
// symbol value. Codes travel implicitly via canonical reconstruction.
Bytes serialize_code_table(const CodeBook& book);
CodeBook parse_code_table(BytesView table);
void write_code_table(Bytes& out, const CodeBook& book);
CodeBook read_code_table(WireCursor& cur);

} // namespace hhc
