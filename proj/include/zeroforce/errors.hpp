#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zf {

// Malformed input text (graph6, edge lists, generator specs).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), offset_(0) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input is structurally fine but larger than the operation supports.
class UnsupportedSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid generator parameters.
class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation precondition violated.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace zf
