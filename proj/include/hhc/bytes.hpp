#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hhc {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

inline BytesView as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline std::string_view as_string_view(BytesView b) {
    return {reinterpret_cast<const char*>(b.data()), b.size()};
}

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

// Token class: ASCII [A-Za-z0-9_]. Everything else, including all
// non-ASCII bytes, is gap material.
constexpr bool is_token_byte(std::uint8_t b) {
    return (b >= 'A' && b <= 'Z') || (b >= 'a' && b <= 'z') ||
           (b >= '0' && b <= '9') || b == '_';
}

inline bool is_single_token(std::string_view s) {
    if (s.empty())
        return false;
    for (unsigned char c : s)
        if (!is_token_byte(c))
            return false;
    return true;
}

// FNV-1a, 64-bit.
constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

inline std::uint64_t fnv1a64(BytesView data) {
    std::uint64_t h = kFnvOffsetBasis;
    for (std::uint8_t b : data) {
        h ^= b;
        h *= kFnvPrime;
    }
    return h;
}

} // namespace hhc
