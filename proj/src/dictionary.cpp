// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "dictionary.hpp"

#include <fstream>
#include <limits>
#include <unordered_set>

#include "errors.hpp"
#include "utf8.hpp"

namespace fastss {

Dictionary::Dictionary(std::vector<std::string> words) : _words(std::move(words)) {
    if (_words.size() >= std::numeric_limits<WordId>::max()) {
        throw UsageError("dictionary has too many words");
    }
    _chars.reserve(_words.size());
    _ids.reserve(_words.size());
    for (std::size_t i = 0; i < _words.size(); ++i) {
        const std::string& w = _words[i];
        if (w.empty()) {
            throw UsageError("dictionary word " + std::to_string(i) + " is empty");
        }
        if (w.size() > kMaxWordBytes) {
            throw UsageError("dictionary word " + std::to_string(i) + " exceeds " + std::to_string(kMaxWordBytes) +
                             " bytes");
        }
        auto decoded = utf8::decode(w);
        if (!decoded) {
            throw UsageError("dictionary word " + std::to_string(i) + " is not valid UTF-8");
        }
        if (!_ids.emplace(w, static_cast<WordId>(i)).second) {
            throw UsageError("duplicate dictionary word '" + w + "'");
        }
        _chars.push_back(std::move(*decoded));
    }
}

std::optional<WordId> Dictionary::find(std::string_view word) const {
    auto it = _ids.find(std::string(word));
    if (it == _ids.end()) {
        return std::nullopt;
    }
    return it->second;
}

double Dictionary::average_length() const noexcept {
    if (_chars.empty()) {
        return 0.0;
    }
    std::size_t total = 0;
    for (const auto& w : _chars) {
        total += w.size();
    }
    return static_cast<double>(total) / static_cast<double>(_chars.size());
}

Dictionary parse_dictionary(std::istream& in) {
    std::vector<std::string> words;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!utf8::decode(line)) {
            throw InputError("invalid UTF-8 on line " + std::to_string(line_no), line_no);
        }
        if (line.size() > kMaxWordBytes) {
            throw InputError("word on line " + std::to_string(line_no) + " is too long", line_no);
        }
        if (seen.insert(line).second) {
            words.push_back(line);
        }
    }
    if (in.bad()) {
        throw InputError("read error after line " + std::to_string(line_no), line_no);
    }
    return Dictionary(std::move(words));
}

Dictionary load_dictionary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open dictionary '" + path.string() + "'", 0);
    }
    return parse_dictionary(in);
}

}
