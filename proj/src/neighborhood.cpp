// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "neighborhood.hpp"

#include <algorithm>

#include "errors.hpp"
#include "utf8.hpp"

namespace fastss {

namespace {

// Visits w with every subset of at most `budget` positions removed. Deletions
// are chosen left to right so each position subset is visited exactly once;
// equal residuals from different subsets are still visited repeatedly.
template <typename Visit>
void visit_deletions(std::u32string& current, std::size_t start, std::size_t budget, Visit& visit) {
    visit(static_cast<const std::u32string&>(current));
    if (budget == 0) {
        return;
    }
    for (std::size_t p = start; p < current.size(); ++p) {
        const char32_t removed = current[p];
        current.erase(p, 1);
        visit_deletions(current, p, budget - 1, visit);
        current.insert(current.begin() + static_cast<std::ptrdiff_t>(p), removed);
    }
}

template <typename Visit>
void for_each_residual(std::u32string_view w, std::size_t max_deletions, Visit&& visit) {
    std::u32string current(w);
    const std::size_t budget = std::min(max_deletions, w.size());
    visit_deletions(current, 0, budget, visit);
}

std::vector<std::u32string> sorted_unique(std::vector<std::u32string> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

}

std::u32string delete_positions(std::u32string_view w, std::span<const std::size_t> positions) {
    std::u32string out;
    out.reserve(w.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= w.size()) {
            throw UsageError("deletion position " + std::to_string(positions[i]) + " out of range for word of length " +
                             std::to_string(w.size()));
        }
        if (i > 0 && positions[i] <= positions[i - 1]) {
            throw UsageError("deletion positions must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (next < positions.size() && positions[next] == i) {
            ++next;
            continue;
        }
        out.push_back(w[i]);
    }
    return out;
}

std::vector<std::u32string> deletion_neighborhood(std::u32string_view w, std::size_t k) {
    std::vector<std::u32string> out;
    if (k > w.size()) {
        return out;
    }
    const std::size_t target = w.size() - k;
    for_each_residual(w, k, [&](const std::u32string& r) {
        if (r.size() == target) {
            out.push_back(r);
        }
    });
    return sorted_unique(std::move(out));
}

std::vector<std::u32string> full_neighborhood(std::u32string_view w, std::size_t d) {
    std::vector<std::u32string> out;
    for_each_residual(w, d, [&](const std::u32string& r) { out.push_back(r); });
    return sorted_unique(std::move(out));
}

ResidualKey hash_residual(HalfTag tag, std::u32string_view r) {
    std::uint64_t h = kFnvOffsetBasis;
    auto feed = [&h](unsigned char byte) {
        h ^= byte;
        h *= kFnvPrime;
    };
    feed(static_cast<unsigned char>(tag));
    for (char32_t cp : r) {
        utf8::for_each_byte(cp, feed);
    }
    return h;
}

void append_residual_keys(std::u32string_view w, std::size_t d, HalfTag tag, std::vector<ResidualKey>& out) {
    for_each_residual(w, d, [&](const std::u32string& r) { out.push_back(hash_residual(tag, r)); });
}

std::vector<ResidualKey> residual_keys(std::u32string_view w, std::size_t d, HalfTag tag) {
    std::vector<ResidualKey> keys;
    append_residual_keys(w, d, tag, keys);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}
