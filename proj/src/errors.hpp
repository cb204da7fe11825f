// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fastss {

// Caller violated a precondition (bad index, empty dictionary, invalid params).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed user input such as an unreadable or non-UTF-8 word list.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::size_t line)
        : std::runtime_error(what), _line(line) {}
    // 1-based; 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return _line; }
private:
    std::size_t _line;
};

// Corrupt or incompatible serialized index.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), _offset(offset) {}
    std::size_t offset() const noexcept { return _offset; }
private:
    std::size_t _offset;
};

// A filtered query disagreed with the exhaustive scan.
class LosslessnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}
