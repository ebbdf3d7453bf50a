#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhc {

// Base class for everything this library throws on bad data or bad usage.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized data: bad magic, bad version, invariant violations,
// Kraft violations, trailing garbage.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

// A decode hit bytes that cannot be part of a valid stream. Carries the
// offset of the offending byte.
class CorruptStreamError : public FormatError {
public:
    CorruptStreamError(const std::string& what, std::size_t offset)
        : FormatError(what + " at byte offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input ended before the decoder got everything it was promised.
class TruncationError : public FormatError {
public:
    explicit TruncationError(const std::string& what) : FormatError(what) {}
};

// A symbol to encode has no codeword in the codebook.
class CoverageError : public Error {
public:
    CoverageError(const std::string& what, unsigned symbol)
        : Error(what), symbol_(symbol) {}

    unsigned symbol() const { return symbol_; }

private:
    unsigned symbol_;
};

// The dictionary a container needs is not the dictionary we have.
class DictionaryMismatchError : public Error {
public:
    explicit DictionaryMismatchError(const std::string& what) : Error(what) {}
};

// A mining keyword that cannot become a pattern (too short, or contains a
// byte outside the token class).
class RejectedKeywordError : public Error {
public:
    RejectedKeywordError(const std::string& what, std::string keyword)
        : Error(what), keyword_(std::move(keyword)) {}

    const std::string& keyword() const { return keyword_; }

private:
    std::string keyword_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace hhc
