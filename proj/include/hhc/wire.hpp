#pragma once

#include <cstdint>

#include "hhc/bytes.hpp"
#include "hhc/error.hpp"

namespace hhc {

// Little-endian primitives for the serialized formats.

inline void put_u16le(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

inline void put_u32le(Bytes& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void put_u64le(Bytes& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

// Bounds-checked sequential reader over a byte view.
class WireCursor {
public:
    explicit WireCursor(BytesView data) : data_(data) {}

    std::size_t offset() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return pos_ == data_.size(); }

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint16_t u16le() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_]) |
                          static_cast<std::uint16_t>(data_[pos_ + 1]) << 8;
        pos_ += 2;
        return v;
    }

    std::uint32_t u32le() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }

    std::uint64_t u64le() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }

    BytesView bytes(std::size_t n) {
        need(n);
        BytesView v = data_.subspan(pos_, n);
        pos_ += n;
        return v;
    }

    void expect_magic(const char (&magic)[5], const char* what) {
        need(4, what);
        for (int i = 0; i < 4; ++i) {
            if (data_[pos_ + i] != static_cast<std::uint8_t>(magic[i]))
                throw FormatError(std::string(what) + ": bad magic");
        }
        pos_ += 4;
    }

    void expect_end(const char* what) {
        if (!at_end())
            throw FormatError(std::string(what) + ": trailing bytes after end of data");
    }

private:
    void need(std::size_t n, const char* what = "blob") {
        if (remaining() < n)
            throw TruncationError(std::string(what) + ": truncated (need " +
                                  std::to_string(n) + " bytes at offset " +
                                  std::to_string(pos_) + ")");
    }

    BytesView data_;
    std::size_t pos_ = 0;
};

} // namespace hhc
