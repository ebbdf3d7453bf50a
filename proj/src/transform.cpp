#include "hhc/transform.hpp"

#include <algorithm>

#include "hhc/error.hpp"
#include "hhc/tokenizer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hhc {

namespace {

constexpr std::size_t kParallelGrain = 256 * 1024;

void encode_run(Bytes& out, BytesView text, const Dictionary& dict, bool tok,
                std::size_t off, std::size_t len) {
    if (tok) {
        if (auto rank = dict.find(as_string_view(text.subspan(off, len)))) {
            ReplacementString r = replacement_for_rank(*rank);
            out.insert(out.end(), r.bytes.begin(), r.bytes.begin() + r.size);
            return;
        }
        out.insert(out.end(), text.begin() + off, text.begin() + off + len);
    } else {
        for (std::size_t i = off; i < off + len; ++i) {
            out.push_back(text[i]);
            if (text[i] == kEscapeByte)
                out.push_back(kLiteralMarker);
        }
    }
}

} // namespace

Bytes encode_level1_serial(BytesView text, const Dictionary& dict) {
    Bytes out;
    out.reserve(text.size());
    for_each_run(text, [&](bool tok, std::size_t off, std::size_t len) {
        encode_run(out, text, dict, tok, off, len);
    });
    return out;
}

Bytes encode_level1(BytesView text, const Dictionary& dict) {
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    if (text.size() >= 2 * kParallelGrain && max_threads > 1) {
        std::size_t pieces = std::min<std::size_t>(
            static_cast<std::size_t>(max_threads), text.size() / kParallelGrain);
        std::vector<BytesView> chunks;
        chunks.reserve(pieces);
        std::size_t begin = 0;
        for (std::size_t p = 0; p < pieces && begin < text.size(); ++p) {
            std::size_t end = (p + 1 == pieces)
                                  ? text.size()
                                  : next_gap_boundary(text, begin + text.size() / pieces);
            end = std::min(end, text.size());
            if (end > begin) {
                chunks.push_back(text.subspan(begin, end - begin));
                begin = end;
            }
        }
        if (begin < text.size())
            chunks.push_back(text.subspan(begin));

        std::vector<Bytes> parts(chunks.size());
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < chunks.size(); ++i)
            parts[i] = encode_level1_serial(chunks[i], dict);

        std::size_t total = 0;
        for (const Bytes& part : parts)
            total += part.size();
        Bytes out;
        out.reserve(total);
        for (const Bytes& part : parts)
            out.insert(out.end(), part.begin(), part.end());
        return out;
    }
#endif
    return encode_level1_serial(text, dict);
}

Bytes decode_level1(BytesView level1, const Dictionary& dict) {
    Bytes out;
    out.reserve(level1.size());
    std::size_t i = 0;
    std::size_t n = level1.size();
    while (i < n) {
        auto esc = std::find(level1.begin() + i, level1.end(), kEscapeByte);
        std::size_t run = static_cast<std::size_t>(esc - (level1.begin() + i));
        out.insert(out.end(), level1.begin() + i, esc);
        i += run;
        if (i == n)
            break;

        std::size_t esc_off = i;
        if (i + 1 >= n)
            throw CorruptStreamError("level1: dangling escape byte", esc_off);
        std::uint8_t marker = level1[i + 1];
        if (marker == kLiteralMarker) {
            out.push_back(kEscapeByte);
            i += 2;
            continue;
        }
        std::size_t rank;
        if (marker == kWideMarker) {
            if (i + 3 >= n)
                throw CorruptStreamError("level1: truncated wide replacement", esc_off);
            rank = kTwoByteRanks + level1[i + 2] +
                   (static_cast<std::size_t>(level1[i + 3]) << 8);
            i += 4;
        } else {
            rank = marker;
            i += 2;
        }
        if (rank >= dict.size())
            throw CorruptStreamError("level1: unknown pattern rank " + std::to_string(rank),
                                     esc_off);
        std::string_view pattern = dict.pattern_at(rank);
        out.insert(out.end(), pattern.begin(), pattern.end());
    }
    return out;
}

} // namespace hhc
