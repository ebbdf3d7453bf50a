#pragma once

#include <cstdint>
#include <functional>

#include "hhc/bytes.hpp"
#include "hhc/dictionary.hpp"

namespace hhc {

struct CompressOptions {
    bool embed_dictionary = false;
    bool huffman_only = false;
};

// Produces the "HHC1" container: header, optional embedded dictionary,
// code table, bit-packed payload. With huffman_only the level-1 pass is
// skipped and the payload codes the input directly.
Bytes compress(BytesView text, const Dictionary& dict, const CompressOptions& opts = {});

// Supplies the dictionary for containers that do not embed one, keyed by
// the header digest. Only consulted for external-dictionary containers.
using DictionaryResolver = std::function<Dictionary(std::uint64_t digest)>;

// Exact inverse of compress. Throws FormatError on malformed containers,
// DictionaryMismatchError when the available dictionary's digest does not
// match the header, TruncationError on short payloads.
Bytes decompress(BytesView container, const DictionaryResolver& resolver = {});

struct ContainerInfo {
    std::uint8_t version = 0;
    bool dictionary_embedded = false;
    bool huffman_only = false;
    std::uint64_t dict_digest = 0;
    std::uint64_t symbol_count = 0;
    std::uint64_t payload_size = 0;
    std::uint32_t dict_blob_size = 0;  // 0 when the dictionary travels separately
    std::uint32_t code_table_size = 0;
};

// Header walk only; the payload is never decoded.
ContainerInfo inspect(BytesView container);

} // namespace hhc
