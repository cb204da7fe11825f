// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "index.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "edit_distance.hpp"
#include "errors.hpp"
#include "utf8.hpp"

namespace fastss {

namespace {

constexpr std::uint32_t kEmptySlot = std::numeric_limits<std::uint32_t>::max();

std::vector<std::size_t> window(std::size_t l, std::uint32_t d, std::size_t lo_clamp, std::size_t hi_clamp) {
    std::vector<std::size_t> out;
    if (lo_clamp > hi_clamp) {
        return out;
    }
    const std::size_t center = (l + 1) / 2;
    const std::size_t reach = half_budget(d);
    const std::size_t lo = std::max(center > reach ? center - reach : 0, lo_clamp);
    const std::size_t hi = std::min(center + reach, hi_clamp);
    for (std::size_t p = lo; p <= hi; ++p) {
        out.push_back(p);
    }
    return out;
}

}

void IndexParams::validate() const {
    if (max_distance > kMaxDistance) {
        throw UsageError("max distance " + std::to_string(max_distance) + " exceeds " + std::to_string(kMaxDistance));
    }
    if (split_threshold && (*split_threshold == 0 || *split_threshold == kNoSplit)) {
        throw UsageError("split threshold must lie in [1, 2^32 - 1)");
    }
}

std::pair<std::u32string_view, std::u32string_view> split_word(std::u32string_view w) {
    if (w.size() < 2) {
        throw UsageError("cannot split a word shorter than 2 characters");
    }
    const std::size_t cut = (w.size() + 1) / 2;
    return {w.substr(0, cut), w.substr(cut)};
}

std::vector<std::size_t> split_positions(std::size_t l, std::uint32_t d) {
    if (l < 2) {
        return {};
    }
    return window(l, d, 1, l - 1);
}

std::vector<std::size_t> probe_positions(std::size_t l, std::uint32_t d) {
    return window(l, d, 0, l);
}

FastSSIndex FastSSIndex::build(Dictionary dict, IndexParams params) {
    params.validate();
    const std::uint32_t d = params.max_distance;
    std::vector<std::pair<ResidualKey, WordId>> pairs;
    std::vector<ResidualKey> keys;
    for (WordId id = 0; id < dict.size(); ++id) {
        const std::u32string_view w = dict.chars(id);
        keys.clear();
        if (!params.split_threshold || w.size() <= *params.split_threshold) {
            append_residual_keys(w, d, HalfTag::Whole, keys);
        } else {
            const auto [prefix, suffix] = split_word(w);
            append_residual_keys(prefix, half_budget(d), HalfTag::Prefix, keys);
            append_residual_keys(suffix, half_budget(d), HalfTag::Suffix, keys);
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (ResidualKey key : keys) {
            pairs.emplace_back(key, id);
        }
    }
    return FastSSIndex(std::move(dict), params, std::move(pairs));
}

FastSSIndex::FastSSIndex(Dictionary dict, IndexParams params, std::vector<std::pair<ResidualKey, WordId>> pairs)
    : _dict(std::move(dict)), _params(params) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (pairs.size() >= std::numeric_limits<std::uint32_t>::max()) {
        throw UsageError("index exceeds 2^32 stored pairs");
    }
    _ids.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i == 0 || pairs[i].first != pairs[i - 1].first) {
            _keys.push_back(pairs[i].first);
            _offsets.push_back(static_cast<std::uint32_t>(_ids.size()));
        }
        _ids.push_back(pairs[i].second);
    }
    _offsets.push_back(static_cast<std::uint32_t>(_ids.size()));
    _stats.stored_pairs = _ids.size();
    _stats.distinct_keys = _keys.size();
    rebuild_slots();
}

void FastSSIndex::rebuild_slots() {
    const std::size_t capacity = std::bit_ceil(std::max<std::size_t>(16, _keys.size() * 2));
    _slots.assign(capacity, kEmptySlot);
    const std::size_t mask = capacity - 1;
    for (std::uint32_t i = 0; i < _keys.size(); ++i) {
        std::size_t slot = _keys[i] & mask;
        while (_slots[slot] != kEmptySlot) {
            slot = (slot + 1) & mask;
        }
        _slots[slot] = i;
    }
}

std::span<const WordId> FastSSIndex::lookup(ResidualKey key) const {
    const std::size_t mask = _slots.size() - 1;
    for (std::size_t slot = key & mask;; slot = (slot + 1) & mask) {
        const std::uint32_t row = _slots[slot];
        if (row == kEmptySlot) {
            return {};
        }
        if (_keys[row] == key) {
            return std::span<const WordId>(_ids).subspan(_offsets[row], _offsets[row + 1] - _offsets[row]);
        }
    }
}

bool FastSSIndex::whole_lookup(std::size_t query_length) const noexcept {
    return !_params.split_threshold ||
           query_length <= std::uint64_t{*_params.split_threshold} + _params.max_distance;
}

bool FastSSIndex::split_lookup(std::size_t query_length) const noexcept {
    return _params.split_threshold &&
           std::uint64_t{query_length} + _params.max_distance >= std::uint64_t{*_params.split_threshold} + 1;
}

std::vector<WordId> FastSSIndex::candidate_set(std::u32string_view q) const {
    const std::uint32_t d = _params.max_distance;
    std::vector<ResidualKey> keys;
    if (whole_lookup(q.size())) {
        append_residual_keys(q, d, HalfTag::Whole, keys);
    }
    if (split_lookup(q.size())) {
        for (std::size_t p : probe_positions(q.size(), d)) {
            append_residual_keys(q.substr(0, p), half_budget(d), HalfTag::Prefix, keys);
            append_residual_keys(q.substr(p), half_budget(d), HalfTag::Suffix, keys);
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<WordId> ids;
    for (ResidualKey key : keys) {
        const auto hits = lookup(key);
        ids.insert(ids.end(), hits.begin(), hits.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::vector<Match> FastSSIndex::query(std::u32string_view q, std::size_t* candidates) const {
    const std::vector<WordId> ids = candidate_set(q);
    if (candidates) {
        *candidates = ids.size();
    }
    std::vector<Match> matches;
    for (WordId id : ids) {
        if (auto distance = banded_edit_distance(_dict.chars(id), q, _params.max_distance)) {
            matches.push_back({id, *distance});
        }
    }
    std::sort(matches.begin(), matches.end());
    return matches;
}

std::vector<Match> FastSSIndex::query(std::string_view utf8_query, std::size_t* candidates) const {
    return query(std::u32string_view(utf8::decode_or_throw(utf8_query)), candidates);
}

bool operator==(const FastSSIndex& a, const FastSSIndex& b) {
    return a._params == b._params && a._dict == b._dict && a._keys == b._keys && a._offsets == b._offsets &&
           a._ids == b._ids;
}

}
