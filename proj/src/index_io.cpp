// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
//
// Index file layout, all integers little-endian:
//
//   "FSSI"  u16 version  u8 d  u32 m (0xFFFFFFFF = never split)
//   u32 word count, then per word: u16 byte length, UTF-8 bytes
//   u64 key count, then per key: u64 key, u32 id count, id count x u32 ids (ascending)
#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iterator>

#include "errors.hpp"
#include "index.hpp"

namespace fastss {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'F', 'S', 'S', 'I'};
constexpr std::uint16_t kFormatVersion = 1;

class Writer {
public:
    explicit Writer(std::vector<std::uint8_t>& out) : _out(out) {}

    template <typename T>
    void put(T value) {
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            _out.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * i)));
        }
    }
    void put_bytes(std::string_view bytes) { _out.insert(_out.end(), bytes.begin(), bytes.end()); }

private:
    std::vector<std::uint8_t>& _out;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : _bytes(bytes) {}

    template <typename T>
    T get(const char* what) {
        need(sizeof(T), what);
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            value |= std::uint64_t{_bytes[_pos + i]} << (8 * i);
        }
        _pos += sizeof(T);
        return static_cast<T>(value);
    }

    std::string get_bytes(std::size_t n, const char* what) {
        need(n, what);
        std::string out(reinterpret_cast<const char*>(_bytes.data() + _pos), n);
        _pos += n;
        return out;
    }

    std::size_t position() const noexcept { return _pos; }
    std::size_t remaining() const noexcept { return _bytes.size() - _pos; }

private:
    void need(std::size_t n, const char* what) const {
        if (remaining() < n) {
            throw FormatError(std::string("truncated index file while reading ") + what, _pos);
        }
    }

    std::span<const std::uint8_t> _bytes;
    std::size_t _pos = 0;
};

}

std::vector<std::uint8_t> FastSSIndex::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(32 + _ids.size() * 4 + _keys.size() * 12);
    Writer w(out);
    for (std::uint8_t b : kMagic) {
        w.put(b);
    }
    w.put(kFormatVersion);
    w.put(static_cast<std::uint8_t>(_params.max_distance));
    w.put(_params.split_threshold.value_or(kNoSplit));
    w.put(static_cast<std::uint32_t>(_dict.size()));
    for (const std::string& word : _dict.words()) {
        w.put(static_cast<std::uint16_t>(word.size()));
        w.put_bytes(word);
    }
    w.put(static_cast<std::uint64_t>(_keys.size()));
    for (std::size_t i = 0; i < _keys.size(); ++i) {
        w.put(_keys[i]);
        w.put(_offsets[i + 1] - _offsets[i]);
        for (std::uint32_t j = _offsets[i]; j < _offsets[i + 1]; ++j) {
            w.put(_ids[j]);
        }
    }
    return out;
}

FastSSIndex FastSSIndex::deserialize(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    for (std::uint8_t expected : kMagic) {
        const std::size_t at = r.position();
        if (r.get<std::uint8_t>("magic") != expected) {
            throw FormatError("bad magic, not an index file", at);
        }
    }
    {
        const std::size_t at = r.position();
        const auto version = r.get<std::uint16_t>("version");
        if (version != kFormatVersion) {
            throw FormatError("unsupported format version " + std::to_string(version), at);
        }
    }

    IndexParams params;
    params.max_distance = r.get<std::uint8_t>("max distance");
    {
        const std::size_t at = r.position();
        const auto m = r.get<std::uint32_t>("split threshold");
        if (m == 0) {
            throw FormatError("split threshold must be at least 1", at);
        }
        if (m != kNoSplit) {
            params.split_threshold = m;
        }
    }

    const auto word_count = r.get<std::uint32_t>("word count");
    std::vector<std::string> words;
    words.reserve(std::min<std::size_t>(word_count, r.remaining() / 2));
    for (std::uint32_t i = 0; i < word_count; ++i) {
        const auto length = r.get<std::uint16_t>("word length");
        words.push_back(r.get_bytes(length, "word bytes"));
    }
    const std::size_t dictionary_end = r.position();
    Dictionary dict;
    try {
        dict = Dictionary(std::move(words));
    } catch (const UsageError& e) {
        throw FormatError(std::string("invalid dictionary section: ") + e.what(), dictionary_end);
    }

    const auto key_count = r.get<std::uint64_t>("key count");
    std::vector<std::pair<ResidualKey, WordId>> pairs;
    ResidualKey previous_key = 0;
    for (std::uint64_t k = 0; k < key_count; ++k) {
        const std::size_t key_at = r.position();
        const auto key = r.get<std::uint64_t>("key");
        if (k > 0 && key <= previous_key) {
            throw FormatError("keys are not strictly ascending", key_at);
        }
        previous_key = key;
        const std::size_t count_at = r.position();
        const auto count = r.get<std::uint32_t>("id count");
        if (count == 0) {
            throw FormatError("key with empty id list", count_at);
        }
        WordId previous_id = 0;
        for (std::uint32_t j = 0; j < count; ++j) {
            const std::size_t id_at = r.position();
            const auto id = r.get<std::uint32_t>("word id");
            if (id >= dict.size()) {
                throw FormatError("word id " + std::to_string(id) + " out of range", id_at);
            }
            if (j > 0 && id <= previous_id) {
                throw FormatError("word ids are not strictly ascending", id_at);
            }
            previous_id = id;
            pairs.emplace_back(key, id);
        }
    }
    if (r.remaining() != 0) {
        throw FormatError("trailing bytes after index", r.position());
    }
    return FastSSIndex(std::move(dict), params, std::move(pairs));
}

void FastSSIndex::save(const std::filesystem::path& path) const {
    const auto bytes = serialize();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot open '" + path.string() + "' for writing", 0);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw InputError("write to '" + path.string() + "' failed", 0);
    }
}

FastSSIndex FastSSIndex::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open index '" + path.string() + "'", 0);
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

}
