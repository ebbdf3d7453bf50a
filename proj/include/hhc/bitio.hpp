#pragma once

#include <cstdint>

#include "hhc/bytes.hpp"
#include "hhc/error.hpp"

namespace hhc {

// MSB-first bit packing: the first bit written lands in the most
// significant bit of the first byte. The final partial byte is zero-padded.
class BitWriter {
public:
    // Appends the low `len` bits of `code`, most significant first. len <= 64.
    void append(std::uint64_t code, unsigned len) {
        if (len > 57) {
            unsigned hi = len - 32;
            append(code >> 32, hi);
            append(code & 0xFFFFFFFFULL, 32);
            return;
        }
        acc_ = (acc_ << len) | (code & mask(len));
        nacc_ += len;
        while (nacc_ >= 8) {
            nacc_ -= 8;
            out_.push_back(static_cast<std::uint8_t>(acc_ >> nacc_));
        }
    }

    // Appends the first `nbits` bits of another MSB-first packed buffer.
    void append_stream(BytesView packed, std::uint64_t nbits) {
        std::size_t full = static_cast<std::size_t>(nbits / 8);
        if (nacc_ == 0) {
            out_.insert(out_.end(), packed.begin(), packed.begin() + full);
        } else {
            for (std::size_t i = 0; i < full; ++i)
                append(packed[i], 8);
        }
        unsigned tail = static_cast<unsigned>(nbits % 8);
        if (tail != 0)
            append(packed[full] >> (8 - tail), tail);
    }

    std::uint64_t bit_count() const { return out_.size() * 8 + nacc_; }

    // Flushes the partial byte (zero-padded) and hands the buffer over.
    Bytes take() {
        if (nacc_ != 0) {
            out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - nacc_)));
            nacc_ = 0;
        }
        acc_ = 0;
        return std::move(out_);
    }

    void reserve_bits(std::uint64_t nbits) { out_.reserve((nbits + 7) / 8); }

private:
    static constexpr std::uint64_t mask(unsigned len) {
        return len >= 64 ? ~0ULL : (1ULL << len) - 1;
    }

    Bytes out_;
    std::uint64_t acc_ = 0;
    unsigned nacc_ = 0;
};

class BitReader {
public:
    explicit BitReader(BytesView data) : data_(data) {}

    bool has_bit() const { return pos_ < data_.size() * 8; }

    unsigned read_bit() {
        if (!has_bit())
            throw TruncationError("bitstream: exhausted");
        std::size_t byte = pos_ >> 3;
        unsigned bit = 7 - (pos_ & 7);
        ++pos_;
        return (data_[byte] >> bit) & 1u;
    }

    std::uint64_t bits_consumed() const { return pos_; }

    // True if every bit from the current position to the end of the buffer
    // is zero and no full byte remains untouched.
    bool rest_is_padding() const {
        if ((pos_ + 7) / 8 != data_.size())
            return false;
        for (std::uint64_t p = pos_; p < data_.size() * 8; ++p) {
            std::size_t byte = p >> 3;
            unsigned bit = 7 - (p & 7);
            if ((data_[byte] >> bit) & 1u)
                return false;
        }
        return true;
    }

private:
    BytesView data_;
    std::uint64_t pos_ = 0;
};

} // namespace hhc
