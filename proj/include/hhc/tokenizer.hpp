#pragma once

#include <cstddef>
#include <vector>

#include "hhc/bytes.hpp"

namespace hhc {

// A maximal run of token bytes, or the gap between two such runs.
// Segments tile the source exactly and alternate in kind.
struct Segment {
    bool is_token;
    std::size_t offset;
    std::size_t length;

    bool operator==(const Segment&) const = default;
};

std::vector<Segment> tokenize(BytesView text);

// First position at or after pos that does not sit inside a token run.
// Splitting work at such a position keeps every token whole.
inline std::size_t next_gap_boundary(BytesView text, std::size_t pos) {
    while (pos < text.size() && is_token_byte(text[pos]))
        ++pos;
    return pos;
}

// Visits each maximal run as f(is_token, offset, length) without
// materializing a segment vector. Same tiling as tokenize().
template <class F>
void for_each_run(BytesView text, F&& f) {
    std::size_t n = text.size();
    std::size_t start = 0;
    while (start < n) {
        bool tok = is_token_byte(text[start]);
        std::size_t end = start + 1;
        while (end < n && is_token_byte(text[end]) == tok)
            ++end;
        f(tok, start, end - start);
        start = end;
    }
}

} // namespace hhc
