// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "edit_distance.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace fastss {

std::uint32_t full_edit_distance(std::u32string_view a, std::u32string_view b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<std::uint32_t> row(m + 1);
    std::iota(row.begin(), row.end(), 0u);
    for (std::size_t i = 1; i <= n; ++i) {
        std::uint32_t diagonal = row[0];
        row[0] = static_cast<std::uint32_t>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const std::uint32_t above = row[j];
            row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0u : 1u)});
            diagonal = above;
        }
    }
    return row[m];
}

DistanceOutcome banded_edit_distance(std::u32string_view a, std::u32string_view b, std::uint32_t bound) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const std::size_t k = bound;
    const std::size_t length_gap = n > m ? n - m : m - n;
    if (length_gap > k) {
        return std::nullopt;
    }

    // Cell (i, j) lives at slot j - i + k of its row; anything outside the
    // band is treated as bound + 1.
    const std::uint32_t over = bound + 1;
    const std::size_t width = 2 * k + 1;
    std::vector<std::uint32_t> prev(width, over);
    std::vector<std::uint32_t> cur(width, over);
    for (std::size_t j = 0; j <= std::min(m, k); ++j) {
        prev[j + k] = static_cast<std::uint32_t>(j);
    }

    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(cur.begin(), cur.end(), over);
        const std::size_t lo = i > k ? i - k : 0;
        const std::size_t hi = std::min(m, i + k);
        std::uint32_t row_min = over;
        for (std::size_t j = lo; j <= hi; ++j) {
            const std::size_t slot = j + k - i;
            std::uint32_t value;
            if (j == 0) {
                value = static_cast<std::uint32_t>(i);
            } else {
                value = prev[slot] + (a[i - 1] == b[j - 1] ? 0u : 1u);
                if (slot + 1 < width) {
                    value = std::min(value, prev[slot + 1] + 1);
                }
                if (slot > 0) {
                    value = std::min(value, cur[slot - 1] + 1);
                }
            }
            value = std::min(value, over);
            cur[slot] = value;
            row_min = std::min(row_min, value);
        }
        if (row_min > bound) {
            return std::nullopt;
        }
        std::swap(prev, cur);
    }

    const std::uint32_t result = prev[m + k - n];
    if (result > bound) {
        return std::nullopt;
    }
    return result;
}

}
