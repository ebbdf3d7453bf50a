#include "hhc/container.hpp"

#include <stdexcept>

#include "hhc/error.hpp"
#include "hhc/huffman.hpp"
#include "hhc/transform.hpp"
#include "hhc/wire.hpp"

namespace hhc {

namespace {

constexpr char kContainerMagic[5] = "HHC1";
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kFlagDictEmbedded = 1u << 0;
constexpr std::uint8_t kFlagHuffmanOnly = 1u << 1;
constexpr std::uint8_t kKnownFlags = kFlagDictEmbedded | kFlagHuffmanOnly;

} // namespace

Bytes compress(BytesView text, const Dictionary& dict, const CompressOptions& opts) {
    Bytes level1;
    BytesView stage = text;
    if (!opts.huffman_only) {
        level1 = encode_level1(text, dict);
        stage = level1;
    }

    FrequencyTable freqs = histogram(stage);
    CodeBook book = build_codebook(freqs);
    EncodedStream enc = huffman_encode(stage, book);

    Bytes out;
    out.reserve(64 + enc.bits.size() + (opts.embed_dictionary ? dict.serialize().size() : 0));
    out.insert(out.end(), kContainerMagic, kContainerMagic + 4);
    out.push_back(kVersion);
    std::uint8_t flags = 0;
    if (opts.embed_dictionary)
        flags |= kFlagDictEmbedded;
    if (opts.huffman_only)
        flags |= kFlagHuffmanOnly;
    out.push_back(flags);
    put_u64le(out, dict.digest());
    if (opts.embed_dictionary) {
        Bytes blob = dict.serialize();
        put_u32le(out, static_cast<std::uint32_t>(blob.size()));
        out.insert(out.end(), blob.begin(), blob.end());
    }
    write_code_table(out, book);
    put_u64le(out, enc.symbol_count);
    put_u64le(out, enc.bits.size());
    out.insert(out.end(), enc.bits.begin(), enc.bits.end());
    return out;
}

Bytes decompress(BytesView container, const DictionaryResolver& resolver) {
    WireCursor cur(container);
    cur.expect_magic(kContainerMagic, "container");
    std::uint8_t version = cur.u8();
    if (version != kVersion)
        throw FormatError("container: unsupported version " + std::to_string(version));
    std::uint8_t flags = cur.u8();
    if (flags & ~kKnownFlags)
        throw FormatError("container: unknown flag bits set");
    bool embedded = flags & kFlagDictEmbedded;
    bool huffman_only = flags & kFlagHuffmanOnly;
    std::uint64_t digest = cur.u64le();

    Dictionary dict;
    bool have_dict = false;
    if (embedded) {
        std::uint32_t blob_len = cur.u32le();
        BytesView blob = cur.bytes(blob_len);
        dict = Dictionary::parse(blob);
        if (dict.digest() != digest)
            throw DictionaryMismatchError(
                "container: embedded dictionary digest does not match header");
        have_dict = true;
    }

    CodeBook book = read_code_table(cur);
    std::uint64_t symbol_count = cur.u64le();
    std::uint64_t payload_len = cur.u64le();
    BytesView payload = cur.bytes(payload_len);
    cur.expect_end("container");

    Bytes level1 = huffman_decode(payload, book, symbol_count);
    if (huffman_only)
        return level1;

    if (!have_dict) {
        if (!resolver)
            throw std::invalid_argument(
                "container: external dictionary required but no resolver given");
        dict = resolver(digest);
        if (dict.digest() != digest)
            throw DictionaryMismatchError("container: resolved dictionary digest " +
                                          std::to_string(dict.digest()) +
                                          " does not match header");
    }
    return decode_level1(level1, dict);
}

ContainerInfo inspect(BytesView container) {
    WireCursor cur(container);
    cur.expect_magic(kContainerMagic, "container");
    ContainerInfo info;
    info.version = cur.u8();
    if (info.version != kVersion)
        throw FormatError("container: unsupported version " + std::to_string(info.version));
    std::uint8_t flags = cur.u8();
    if (flags & ~kKnownFlags)
        throw FormatError("container: unknown flag bits set");
    info.dictionary_embedded = flags & kFlagDictEmbedded;
    info.huffman_only = flags & kFlagHuffmanOnly;
    info.dict_digest = cur.u64le();
    if (info.dictionary_embedded) {
        info.dict_blob_size = cur.u32le();
        cur.bytes(info.dict_blob_size);
    }
    std::uint16_t symbols = cur.u16le();
    if (symbols > 256)
        throw FormatError("container: code table symbol count exceeds 256");
    cur.bytes(2u * symbols);
    info.code_table_size = 2 + 2u * symbols;
    info.symbol_count = cur.u64le();
    info.payload_size = cur.u64le();
    cur.bytes(info.payload_size);
    cur.expect_end("container");
    return info;
}

} // namespace hhc
