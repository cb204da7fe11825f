// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fastss {

// Position of a word in its dictionary. Stable for the dictionary's lifetime.
using WordId = std::uint32_t;

// Longest word the index file format can carry, in UTF-8 bytes.
inline constexpr std::size_t kMaxWordBytes = 0xFFFF;

// Ordered list of unique, non-empty UTF-8 words.
class Dictionary {
public:
    Dictionary() = default;

    // Throws UsageError on duplicates, empty words, invalid UTF-8 or words
    // longer than kMaxWordBytes.
    explicit Dictionary(std::vector<std::string> words);

    std::size_t size() const noexcept { return _words.size(); }
    bool empty() const noexcept { return _words.empty(); }

    const std::string& word(WordId id) const { return _words.at(id); }
    std::u32string_view chars(WordId id) const { return _chars.at(id); }
    std::span<const std::string> words() const noexcept { return _words; }

    std::optional<WordId> find(std::string_view word) const;

    // Mean length in Unicode scalar values; 0 for an empty dictionary.
    double average_length() const noexcept;

    friend bool operator==(const Dictionary& a, const Dictionary& b) { return a._words == b._words; }

private:
    std::vector<std::string> _words;
    std::vector<std::u32string> _chars;
    std::unordered_map<std::string, WordId> _ids;
};

// One word per line. Trailing "\n" / "\r\n" are stripped, empty lines are
// skipped and repeated words keep their first position. Throws InputError
// naming the 1-based line of any invalid UTF-8.
Dictionary parse_dictionary(std::istream& in);
Dictionary load_dictionary(const std::filesystem::path& path);

}
