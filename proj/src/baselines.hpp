// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "dictionary.hpp"
#include "index.hpp"

namespace fastss {

// Computes the full distance to every word. Ground truth for the filters.
std::vector<Match> naive_scan(const Dictionary& dict, std::u32string_view q, std::uint32_t d);

// Burkhard-Keller tree with one word per node, built in dictionary order.
class BKTree {
public:
    struct Edge {
        std::uint32_t distance;  // distance between parent and child word
        std::uint32_t child;     // node index
    };
    struct Node {
        WordId word;
        std::vector<Edge> children;  // sorted by distance, keys unique
    };

    struct QueryResult {
        std::vector<Match> matches;  // ordered by (distance, id)
        std::uint64_t distance_computations = 0;
    };

    // Throws UsageError when dict is empty. The tree refers to dict, which
    // must outlive it.
    explicit BKTree(const Dictionary& dict);

    QueryResult query(std::u32string_view q, std::uint32_t d) const;

    const std::vector<Node>& nodes() const noexcept { return _nodes; }
    const Dictionary& dictionary() const noexcept { return *_dict; }

private:
    const Dictionary* _dict;
    std::vector<Node> _nodes;  // _nodes[0] is the root
};

}
