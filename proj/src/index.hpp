// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dictionary.hpp"
#include "neighborhood.hpp"

namespace fastss {

// Serialized value of an unbounded split threshold.
inline constexpr std::uint32_t kNoSplit = 0xFFFFFFFFu;
inline constexpr std::uint32_t kMaxDistance = 0xFF;

struct IndexParams {
    // Largest edit distance a query may report. Fixed at build time.
    std::uint32_t max_distance = 0;
    // Words strictly longer than this are split in half before indexing.
    // std::nullopt never splits.
    std::optional<std::uint32_t> split_threshold;

    // Throws UsageError unless max_distance <= kMaxDistance and the threshold,
    // when present, lies in [1, kNoSplit).
    void validate() const;

    friend bool operator==(const IndexParams&, const IndexParams&) = default;
};

struct IndexStats {
    std::uint64_t stored_pairs = 0;   // (key, word) entries
    std::uint64_t distinct_keys = 0;
};

struct Match {
    WordId word_id = 0;
    std::uint32_t distance = 0;

    // Orders by distance first, then id.
    friend auto operator<=>(const Match& a, const Match& b) {
        if (auto c = a.distance <=> b.distance; c != 0) {
            return c;
        }
        return a.word_id <=> b.word_id;
    }
    friend bool operator==(const Match&, const Match&) = default;
};

// Error budget for each half of a split word: ceil(d / 2).
constexpr std::uint32_t half_budget(std::uint32_t d) { return (d + 1) / 2; }

// Splits w after ceil(|w|/2) characters. Requires |w| >= 2.
std::pair<std::u32string_view, std::u32string_view> split_word(std::u32string_view w);

// Cut points in [ceil(l/2) - ceil(d/2), ceil(l/2) + ceil(d/2)] that leave both
// halves non-empty.
std::vector<std::size_t> split_positions(std::size_t l, std::uint32_t d);

// Same window clamped to [0, l] instead. A query may align with a split word
// through an empty half when the word's halves are shorter than the error
// budget, so the query path probes these too.
std::vector<std::size_t> probe_positions(std::size_t l, std::uint32_t d);

// Residual-key index over a dictionary. Immutable once built; every const
// member is safe to call concurrently.
class FastSSIndex {
public:
    static FastSSIndex build(Dictionary dict, IndexParams params);

    const Dictionary& dictionary() const noexcept { return _dict; }
    const IndexParams& params() const noexcept { return _params; }
    const IndexStats& stats() const noexcept { return _stats; }

    // Words stored under key, ascending. Empty when the key is absent.
    std::span<const WordId> lookup(ResidualKey key) const;

    // Ids of all words sharing a residual key with q, ascending and unique.
    std::vector<WordId> candidate_set(std::u32string_view q) const;

    // Verified matches within max_distance, ordered by (distance, id).
    // candidates, when given, receives the size of the candidate set.
    std::vector<Match> query(std::u32string_view q, std::size_t* candidates = nullptr) const;
    std::vector<Match> query(std::string_view utf8_query, std::size_t* candidates = nullptr) const;

    std::vector<std::uint8_t> serialize() const;
    // Throws FormatError with the offending byte offset.
    static FastSSIndex deserialize(std::span<const std::uint8_t> bytes);

    void save(const std::filesystem::path& path) const;
    static FastSSIndex load(const std::filesystem::path& path);

    friend bool operator==(const FastSSIndex& a, const FastSSIndex& b);

private:
    FastSSIndex(Dictionary dict, IndexParams params, std::vector<std::pair<ResidualKey, WordId>> pairs);

    void rebuild_slots();
    bool whole_lookup(std::size_t query_length) const noexcept;
    bool split_lookup(std::size_t query_length) const noexcept;

    Dictionary _dict;
    IndexParams _params;
    IndexStats _stats;
    // Compressed rows: the ids for _keys[i] are _ids[_offsets[i] .. _offsets[i + 1]).
    std::vector<ResidualKey> _keys;
    std::vector<std::uint32_t> _offsets;
    std::vector<WordId> _ids;
    // Open-addressing table of positions into _keys, probed linearly from the
    // low bits of the key.
    std::vector<std::uint32_t> _slots;
};

}
