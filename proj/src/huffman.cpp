#include "hhc/huffman.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "hhc/bitio.hpp"
#include "hhc/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hhc {

namespace {

constexpr std::size_t kParallelGrain = 256 * 1024;
constexpr unsigned kMaxCodeLength = 64;

std::vector<BytesView> split_even(BytesView data, std::size_t pieces) {
    std::vector<BytesView> chunks;
    chunks.reserve(pieces);
    std::size_t begin = 0;
    for (std::size_t p = 0; p < pieces; ++p) {
        std::size_t end = (p + 1 == pieces) ? data.size() : (p + 1) * (data.size() / pieces);
        if (end > begin)
            chunks.push_back(data.subspan(begin, end - begin));
        begin = end;
    }
    return chunks;
}

// Canonical assignment: consecutive code values in (length, symbol) order.
void assign_canonical_codes(CodeBook& book) {
    struct Item {
        std::uint8_t len;
        std::uint8_t sym;
    };
    std::vector<Item> items;
    for (unsigned s = 0; s < 256; ++s) {
        if (book.lengths[s] != 0)
            items.push_back({book.lengths[s], static_cast<std::uint8_t>(s)});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return a.len != b.len ? a.len < b.len : a.sym < b.sym;
    });
    std::uint64_t code = 0;
    unsigned prev = items.empty() ? 0 : items.front().len;
    for (const Item& it : items) {
        code <<= (it.len - prev);
        prev = it.len;
        book.codes[it.sym] = code;
        ++code;
    }
}

// Kraft sum in units of 2^-64. Returns true when the sum stays <= 1 and
// sets exact=true on equality.
bool kraft_within_one(const std::array<std::uint8_t, 256>& lengths, bool& exact) {
    unsigned __int128 sum = 0;
    const unsigned __int128 one = static_cast<unsigned __int128>(1) << 64;
    for (std::uint8_t l : lengths) {
        if (l == 0)
            continue;
        sum += static_cast<unsigned __int128>(1) << (64 - l);
        if (sum > one) {
            exact = false;
            return false;
        }
    }
    exact = sum == one;
    return true;
}

struct CanonicalDecoder {
    std::array<std::uint64_t, kMaxCodeLength + 1> first_code{};
    std::array<std::uint32_t, kMaxCodeLength + 1> count{};
    std::array<std::uint32_t, kMaxCodeLength + 1> base_index{};
    std::array<std::uint8_t, 256> symbols{};
    unsigned max_len = 0;

    explicit CanonicalDecoder(const CodeBook& book) {
        struct Item {
            std::uint8_t len;
            std::uint8_t sym;
        };
        std::vector<Item> items;
        for (unsigned s = 0; s < 256; ++s) {
            if (book.lengths[s] != 0) {
                items.push_back({book.lengths[s], static_cast<std::uint8_t>(s)});
                max_len = std::max<unsigned>(max_len, book.lengths[s]);
            }
        }
        std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            return a.len != b.len ? a.len < b.len : a.sym < b.sym;
        });
        for (std::size_t i = 0; i < items.size(); ++i) {
            symbols[i] = items[i].sym;
            count[items[i].len] += 1;
        }
        unsigned __int128 code = 0;
        std::uint32_t index = 0;
        for (unsigned len = 1; len <= max_len; ++len) {
            first_code[len] = static_cast<std::uint64_t>(code);
            base_index[len] = index;
            index += count[len];
            code = (code + count[len]) << 1;
        }
    }
};

} // namespace

FrequencyTable histogram_serial(BytesView data) {
    FrequencyTable table;
    for (std::uint8_t b : data)
        table.counts[b] += 1;
    return table;
}

FrequencyTable histogram(BytesView data) {
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    if (data.size() >= 2 * kParallelGrain && max_threads > 1) {
        std::vector<BytesView> chunks = split_even(
            data, std::min<std::size_t>(max_threads, data.size() / kParallelGrain));
        std::vector<FrequencyTable> partial(chunks.size());
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < chunks.size(); ++i)
            partial[i] = histogram_serial(chunks[i]);
        FrequencyTable table;
        for (const FrequencyTable& part : partial)
            for (unsigned s = 0; s < 256; ++s)
                table.counts[s] += part.counts[s];
        return table;
    }
#endif
    return histogram_serial(data);
}

CodeBook build_codebook(const FrequencyTable& freqs) {
    CodeBook book;

    struct Node {
        unsigned __int128 weight;
        std::uint16_t min_sym;  // smallest symbol underneath, for tie-breaking
        std::int32_t left = -1;
        std::int32_t right = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(512);

    struct HeapEntry {
        unsigned __int128 weight;
        std::uint16_t min_sym;
        std::int32_t node;
    };
    auto later = [](const HeapEntry& a, const HeapEntry& b) {
        return a.weight != b.weight ? a.weight > b.weight : a.min_sym > b.min_sym;
    };
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(later)> heap(later);

    for (unsigned s = 0; s < 256; ++s) {
        if (freqs.counts[s] != 0) {
            nodes.push_back(Node{freqs.counts[s], static_cast<std::uint16_t>(s), -1, -1});
            heap.push(HeapEntry{nodes.back().weight, nodes.back().min_sym,
                                static_cast<std::int32_t>(nodes.size() - 1)});
        }
    }

    if (heap.empty())
        return book;
    if (heap.size() == 1) {
        book.lengths[heap.top().min_sym] = 1;
        assign_canonical_codes(book);
        return book;
    }

    while (heap.size() > 1) {
        HeapEntry a = heap.top();
        heap.pop();
        HeapEntry b = heap.top();
        heap.pop();
        nodes.push_back(Node{a.weight + b.weight, std::min(a.min_sym, b.min_sym),
                             a.node, b.node});
        heap.push(HeapEntry{nodes.back().weight, nodes.back().min_sym,
                            static_cast<std::int32_t>(nodes.size() - 1)});
    }

    // Leaf depths become code lengths.
    struct Visit {
        std::int32_t node;
        unsigned depth;
    };
    std::vector<Visit> stack{{heap.top().node, 0}};
    while (!stack.empty()) {
        Visit v = stack.back();
        stack.pop_back();
        const Node& node = nodes[v.node];
        if (node.left < 0) {
            if (v.depth > kMaxCodeLength)
                throw FormatError("huffman: code length exceeds 64 bits");
            book.lengths[node.min_sym] = static_cast<std::uint8_t>(v.depth);
            continue;
        }
        stack.push_back({node.left, v.depth + 1});
        stack.push_back({node.right, v.depth + 1});
    }

    assign_canonical_codes(book);
    return book;
}

EncodedStream huffman_encode_serial(BytesView data, const CodeBook& book) {
    BitWriter writer;
    std::uint64_t total_bits = 0;
    for (std::uint8_t b : data) {
        if (book.lengths[b] == 0)
            throw CoverageError("huffman: symbol " + std::to_string(b) +
                                    " has no codeword",
                                b);
        total_bits += book.lengths[b];
    }
    writer.reserve_bits(total_bits);
    for (std::uint8_t b : data)
        writer.append(book.codes[b], book.lengths[b]);
    return EncodedStream{writer.take(), data.size()};
}

EncodedStream huffman_encode(BytesView data, const CodeBook& book) {
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    if (data.size() >= 2 * kParallelGrain && max_threads > 1) {
        std::vector<BytesView> chunks = split_even(
            data, std::min<std::size_t>(max_threads, data.size() / kParallelGrain));
        std::vector<std::uint64_t> part_bits(chunks.size(), 0);
        std::vector<int> missing(chunks.size(), -1);
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            std::uint64_t bits = 0;
            for (std::uint8_t b : chunks[i]) {
                if (book.lengths[b] == 0) {
                    missing[i] = b;
                    break;
                }
                bits += book.lengths[b];
            }
            part_bits[i] = bits;
        }
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            if (missing[i] >= 0)
                throw CoverageError("huffman: symbol " + std::to_string(missing[i]) +
                                        " has no codeword",
                                    static_cast<unsigned>(missing[i]));
        }

        std::vector<Bytes> parts(chunks.size());
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            BitWriter local;
            local.reserve_bits(part_bits[i]);
            for (std::uint8_t b : chunks[i])
                local.append(book.codes[b], book.lengths[b]);
            parts[i] = local.take();
        }

        BitWriter writer;
        std::uint64_t total_bits = 0;
        for (std::uint64_t bits : part_bits)
            total_bits += bits;
        writer.reserve_bits(total_bits);
        for (std::size_t i = 0; i < chunks.size(); ++i)
            writer.append_stream(parts[i], part_bits[i]);
        return EncodedStream{writer.take(), data.size()};
    }
#endif
    return huffman_encode_serial(data, book);
}

Bytes huffman_decode(BytesView bits, const CodeBook& book, std::uint64_t symbol_count) {
    CanonicalDecoder decoder(book);
    BitReader reader(bits);
    Bytes out;
    out.reserve(symbol_count);
    for (std::uint64_t i = 0; i < symbol_count; ++i) {
        std::uint64_t value = 0;
        unsigned len = 0;
        for (;;) {
            if (len >= decoder.max_len)
                throw CorruptStreamError("huffman: bit sequence is no codeword",
                                         reader.bits_consumed() / 8);
            value = (value << 1) | reader.read_bit();
            ++len;
            if (decoder.count[len] != 0 && value - decoder.first_code[len] < decoder.count[len]) {
                out.push_back(decoder.symbols[decoder.base_index[len] +
                                              (value - decoder.first_code[len])]);
                break;
            }
        }
    }
    if (!reader.rest_is_padding())
        throw FormatError("huffman: trailing garbage after final symbol");
    return out;
}

Bytes serialize_code_table(const CodeBook& book) {
    Bytes out;
    write_code_table(out, book);
    return out;
}

void write_code_table(Bytes& out, const CodeBook& book) {
    put_u16le(out, static_cast<std::uint16_t>(book.present_symbols()));
    for (unsigned s = 0; s < 256; ++s) {
        if (book.lengths[s] != 0) {
            out.push_back(static_cast<std::uint8_t>(s));
            out.push_back(book.lengths[s]);
        }
    }
}

CodeBook read_code_table(WireCursor& cur) {
    std::uint16_t count = cur.u16le();
    if (count > 256)
        throw FormatError("code table: symbol count " + std::to_string(count) + " exceeds 256");
    CodeBook book;
    int prev_sym = -1;
    for (std::uint16_t i = 0; i < count; ++i) {
        std::uint8_t sym = cur.u8();
        std::uint8_t len = cur.u8();
        if (static_cast<int>(sym) <= prev_sym)
            throw FormatError("code table: symbols not strictly ascending");
        prev_sym = sym;
        if (len == 0)
            throw FormatError("code table: zero code length for symbol " + std::to_string(sym));
        if (len > kMaxCodeLength)
            throw FormatError("code table: code length exceeds 64 bits");
        book.lengths[sym] = len;
    }

    bool exact = false;
    if (!kraft_within_one(book.lengths, exact))
        throw FormatError("code table: Kraft inequality violated (overfull code)");
    if (count == 1) {
        if (book.max_length() != 1)
            throw FormatError("code table: single-symbol code must have length 1");
    } else if (count >= 2 && !exact) {
        throw FormatError("code table: incomplete code (Kraft sum below 1)");
    }

    assign_canonical_codes(book);
    return book;
}

CodeBook parse_code_table(BytesView table) {
    WireCursor cur(table);
    CodeBook book = read_code_table(cur);
    cur.expect_end("code table");
    return book;
}

} // namespace hhc
