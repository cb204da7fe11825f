// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fastss {

// Which part of a dictionary word a residual was taken from. The tag is
// hashed together with the residual so the three key spaces never mix.
enum class HalfTag : std::uint8_t {
    Whole = 0x00,
    Prefix = 0x01,
    Suffix = 0x02,
};

using ResidualKey = std::uint64_t;

inline constexpr std::uint64_t kFnvOffsetBasis = 0xCBF29CE484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001B3ull;

// Removes the given positions (strictly increasing, each < |w|) from w.
std::u32string delete_positions(std::u32string_view w, std::span<const std::size_t> positions);

// Distinct words reachable by deleting exactly k positions, sorted.
// Empty when k > |w|.
std::vector<std::u32string> deletion_neighborhood(std::u32string_view w, std::size_t k);

// Distinct words reachable by deleting at most d positions, sorted. Always contains w.
std::vector<std::u32string> full_neighborhood(std::u32string_view w, std::size_t d);

// FNV-1a 64 over the tag byte followed by the UTF-8 bytes of r.
ResidualKey hash_residual(HalfTag tag, std::u32string_view r);

// Sorted, duplicate-free keys of every residual of w with at most d deletions.
std::vector<ResidualKey> residual_keys(std::u32string_view w, std::size_t d, HalfTag tag);

// Appends keys of all residuals of w (at most d deletions) to out, unsorted and
// possibly repeated. Used on the query path where the caller deduplicates ids.
void append_residual_keys(std::u32string_view w, std::size_t d, HalfTag tag, std::vector<ResidualKey>& out);

}
