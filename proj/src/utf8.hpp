// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fastss::utf8 {

// Decodes UTF-8 into Unicode scalar values. Rejects overlong forms,
// surrogates and code points above U+10FFFF.
std::optional<std::u32string> decode(std::string_view bytes);

// Like decode() but throws UsageError on invalid input.
std::u32string decode_or_throw(std::string_view bytes);

std::string encode(std::u32string_view text);

// Appends the UTF-8 form of one scalar value.
void append(std::string& out, char32_t cp);

// Calls sink(byte) for each UTF-8 byte of cp without allocating.
template <typename Sink>
inline void for_each_byte(char32_t cp, Sink&& sink) {
    if (cp < 0x80) {
        sink(static_cast<unsigned char>(cp));
    } else if (cp < 0x800) {
        sink(static_cast<unsigned char>(0xC0 | (cp >> 6)));
        sink(static_cast<unsigned char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        sink(static_cast<unsigned char>(0xE0 | (cp >> 12)));
        sink(static_cast<unsigned char>(0x80 | ((cp >> 6) & 0x3F)));
        sink(static_cast<unsigned char>(0x80 | (cp & 0x3F)));
    } else {
        sink(static_cast<unsigned char>(0xF0 | (cp >> 18)));
        sink(static_cast<unsigned char>(0x80 | ((cp >> 12) & 0x3F)));
        sink(static_cast<unsigned char>(0x80 | ((cp >> 6) & 0x3F)));
        sink(static_cast<unsigned char>(0x80 | (cp & 0x3F)));
    }
}

}
