// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include <random>

#include <gtest/gtest.h>

#include "baselines.hpp"
#include "edit_distance.hpp"
#include "errors.hpp"
#include "support/oracles.hpp"

using namespace fastss;
using namespace fastss::testing;

TEST(NaiveScan, examples) {
    EXPECT_EQ(naive_scan(Dictionary({"a", "b"}), U"a", 0), (std::vector<Match>{{0, 0}}));
    EXPECT_TRUE(naive_scan(Dictionary(), U"a", 3).empty());
    EXPECT_EQ(naive_scan(Dictionary({"ab", "a", "b"}), U"a", 1), (std::vector<Match>{{1, 0}, {0, 1}, {2, 1}}));
}

TEST(NaiveScan, uses_reference_distance) {
    std::mt19937_64 rng(51);
    const Dictionary dict(random_dictionary(rng, 100, 0 + 1, 8, 3));
    for (int i = 0; i < 50; ++i) {
        const auto q = random_word(rng, 0, 8, 3);
        for (const auto& match : naive_scan(dict, q, 2)) {
            ASSERT_EQ(match.distance, recursive_edit_distance(std::u32string(dict.chars(match.word_id)), q));
        }
    }
}

TEST(BKTree, single_node) {
    const Dictionary dict({"a"});
    const BKTree tree(dict);
    EXPECT_EQ(tree.nodes().size(), 1u);
    const auto result = tree.query(U"a", 0);
    EXPECT_EQ(result.matches, (std::vector<Match>{{0, 0}}));
    EXPECT_EQ(result.distance_computations, 1u);
}

TEST(BKTree, rejects_empty_dictionary) {
    const Dictionary dict;
    EXPECT_THROW(BKTree{dict}, UsageError);
}

TEST(BKTree, deterministic_shape) {
    const Dictionary dict({"book", "books", "cake", "boo", "cape", "cart"});
    const BKTree a(dict);
    const BKTree b(dict);
    ASSERT_EQ(a.nodes().size(), b.nodes().size());
    for (std::size_t i = 0; i < a.nodes().size(); ++i) {
        ASSERT_EQ(a.nodes()[i].word, b.nodes()[i].word);
        ASSERT_EQ(a.nodes()[i].children.size(), b.nodes()[i].children.size());
    }
    EXPECT_EQ(a.nodes()[0].word, 0u);
}

TEST(BKTree, edge_labels_are_exact_distances_and_every_word_appears_once) {
    std::mt19937_64 rng(52);
    for (int round = 0; round < 10; ++round) {
        const Dictionary dict(random_dictionary(rng, 300, 1, 10, 4));
        const BKTree tree(dict);
        std::vector<int> seen(dict.size(), 0);
        for (const auto& node : tree.nodes()) {
            ++seen[node.word];
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                const auto& edge = node.children[i];
                ASSERT_GT(edge.distance, 0u);
                if (i > 0) {
                    ASSERT_LT(node.children[i - 1].distance, edge.distance);
                }
                ASSERT_EQ(full_edit_distance(dict.chars(node.word), dict.chars(tree.nodes()[edge.child].word)),
                          edge.distance);
            }
        }
        ASSERT_EQ(seen, std::vector<int>(dict.size(), 1));
    }
}

TEST(BKTree, query_equals_naive_scan) {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 10; ++round) {
        const Dictionary dict(random_dictionary(rng, 400, 1, 12, 5));
        const BKTree tree(dict);
        for (int i = 0; i < 100; ++i) {
            const auto q = random_word(rng, 0, 12, 5);
            const std::uint32_t d = static_cast<std::uint32_t>(i % 5);
            const auto result = tree.query(q, d);
            ASSERT_EQ(result.matches, naive_scan(dict, q, d));
            ASSERT_LE(result.distance_computations, dict.size());
        }
    }
}

// Every subtree skipped by the triangle-inequality test holds no match.
TEST(BKTree, pruned_subtrees_hold_no_matches) {
    std::mt19937_64 rng(54);
    const Dictionary dict(random_dictionary(rng, 200, 1, 8, 3));
    const BKTree tree(dict);
    const auto& nodes = tree.nodes();
    std::function<bool(std::uint32_t, const std::u32string&, std::uint32_t)> subtree_has_match =
        [&](std::uint32_t at, const std::u32string& q, std::uint32_t d) {
            if (full_edit_distance(dict.chars(nodes[at].word), q) <= d) {
                return true;
            }
            for (const auto& e : nodes[at].children) {
                if (subtree_has_match(e.child, q, d)) {
                    return true;
                }
            }
            return false;
        };
    for (int i = 0; i < 100; ++i) {
        const auto q = random_word(rng, 0, 8, 3);
        const std::uint32_t d = static_cast<std::uint32_t>(i % 3);
        for (const auto& node : nodes) {
            const auto v = full_edit_distance(dict.chars(node.word), q);
            for (const auto& e : node.children) {
                const bool pruned = e.distance + d < v || e.distance > v + d;
                if (pruned) {
                    ASSERT_FALSE(subtree_has_match(e.child, q, d));
                }
            }
        }
    }
}
