// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "baselines.hpp"

#include <algorithm>

#include "edit_distance.hpp"
#include "errors.hpp"

namespace fastss {

std::vector<Match> naive_scan(const Dictionary& dict, std::u32string_view q, std::uint32_t d) {
    std::vector<Match> matches;
    for (WordId id = 0; id < dict.size(); ++id) {
        const std::uint32_t distance = full_edit_distance(dict.chars(id), q);
        if (distance <= d) {
            matches.push_back({id, distance});
        }
    }
    std::sort(matches.begin(), matches.end());
    return matches;
}

BKTree::BKTree(const Dictionary& dict) : _dict(&dict) {
    if (dict.empty()) {
        throw UsageError("cannot build a BK-tree over an empty dictionary");
    }
    _nodes.reserve(dict.size());
    _nodes.push_back({0, {}});
    for (WordId id = 1; id < dict.size(); ++id) {
        std::uint32_t at = 0;
        for (;;) {
            const std::uint32_t distance = full_edit_distance(dict.chars(_nodes[at].word), dict.chars(id));
            auto& children = _nodes[at].children;
            auto it = std::lower_bound(children.begin(), children.end(), distance,
                                       [](const Edge& e, std::uint32_t v) { return e.distance < v; });
            if (it != children.end() && it->distance == distance) {
                at = it->child;
                continue;
            }
            const auto child = static_cast<std::uint32_t>(_nodes.size());
            children.insert(it, Edge{distance, child});
            _nodes.push_back({id, {}});
            break;
        }
    }
}

BKTree::QueryResult BKTree::query(std::u32string_view q, std::uint32_t d) const {
    QueryResult result;
    std::vector<std::uint32_t> pending{0};
    while (!pending.empty()) {
        const Node& node = _nodes[pending.back()];
        pending.pop_back();
        const std::uint32_t distance = full_edit_distance(_dict->chars(node.word), q);
        ++result.distance_computations;
        if (distance <= d) {
            result.matches.push_back({node.word, distance});
        }
        // Triangle inequality: only children keyed within [distance - d, distance + d]
        // can hold a word within d of q.
        const std::uint32_t lo = distance > d ? distance - d : 0;
        const std::uint32_t hi = distance + d;
        for (const Edge& e : node.children) {
            if (e.distance > hi) {
                break;
            }
            if (e.distance >= lo) {
                pending.push_back(e.child);
            }
        }
    }
    std::sort(result.matches.begin(), result.matches.end());
    return result;
}

}
