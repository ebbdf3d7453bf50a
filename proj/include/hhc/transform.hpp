#pragma once

#include "hhc/bytes.hpp"
#include "hhc/dictionary.hpp"

namespace hhc {

// Level-1 substitution: every token that exactly equals a dictionary
// pattern becomes its replacement string; literal 0x1B bytes become
// [0x1B, 0xFF]; everything else passes through verbatim.
//
// encode_level1 splits large inputs at gap boundaries and transforms the
// chunks in parallel; the output is byte-identical to the serial variant.
Bytes encode_level1(BytesView text, const Dictionary& dict);
Bytes encode_level1_serial(BytesView text, const Dictionary& dict);

// Exact inverse. Throws CorruptStreamError (with the byte offset of the
// offending escape) on dangling escapes, truncated wide forms, or ranks the
// dictionary does not hold.
Bytes decode_level1(BytesView level1, const Dictionary& dict);

} // namespace hhc
