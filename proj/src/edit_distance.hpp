// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace fastss {

// Exact distance when it is within the bound, std::nullopt when it exceeds it.
using DistanceOutcome = std::optional<std::uint32_t>;

// Unit-cost Levenshtein distance (insert, delete, substitute) over Unicode
// scalar values. Fills the whole table; used as the reference for everything else.
std::uint32_t full_edit_distance(std::u32string_view a, std::u32string_view b);

// Levenshtein distance restricted to the diagonal band of width 2*bound+1.
// Stops as soon as a whole band row exceeds the bound.
DistanceOutcome banded_edit_distance(std::u32string_view a, std::u32string_view b, std::uint32_t bound);

}
