// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "baselines.hpp"
#include "edit_distance.hpp"
#include "errors.hpp"
#include "index.hpp"
#include "support/oracles.hpp"
#include "utf8.hpp"

using namespace fastss;
using namespace fastss::testing;

namespace {

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t p = lo; p <= hi; ++p) {
        out.push_back(p);
    }
    return out;
}

}

TEST(SplitWord, longer_half_first) {
    EXPECT_EQ(split_word(U"abcdef"), std::make_pair(std::u32string_view(U"abc"), std::u32string_view(U"def")));
    EXPECT_EQ(split_word(U"abcde"), std::make_pair(std::u32string_view(U"abc"), std::u32string_view(U"de")));
    EXPECT_EQ(split_word(U"ab"), std::make_pair(std::u32string_view(U"a"), std::u32string_view(U"b")));
    EXPECT_THROW(split_word(U"a"), UsageError);
    EXPECT_THROW(split_word(U""), UsageError);
}

TEST(SplitPositions, window_around_the_middle) {
    EXPECT_EQ(split_positions(10, 2), range(4, 6));
    EXPECT_EQ(split_positions(9, 3), range(3, 7));
    EXPECT_TRUE(split_positions(1, 4).empty());
    EXPECT_TRUE(split_positions(0, 0).empty());
    EXPECT_EQ(split_positions(4, 4), range(1, 3));
    EXPECT_EQ(split_positions(7, 0), range(4, 4));
}

TEST(ProbePositions, keeps_empty_halves) {
    EXPECT_EQ(probe_positions(10, 2), range(4, 6));
    EXPECT_EQ(probe_positions(1, 4), range(0, 1));
    EXPECT_EQ(probe_positions(4, 4), range(0, 4));
    EXPECT_EQ(probe_positions(0, 1), range(0, 0));
}

TEST(IndexParams, validation) {
    EXPECT_THROW((IndexParams{2, 0u}).validate(), UsageError);
    EXPECT_THROW((IndexParams{2, kNoSplit}).validate(), UsageError);
    EXPECT_THROW((IndexParams{256, std::nullopt}).validate(), UsageError);
    EXPECT_NO_THROW((IndexParams{4, 1u}).validate());
}

TEST(BuildIndex, stored_pair_counts) {
    const Dictionary one({"abcdefghij"});
    EXPECT_EQ(FastSSIndex::build(one, {2, std::nullopt}).stats().stored_pairs, residual_count(10, 2));
    EXPECT_EQ(FastSSIndex::build(one, {2, 5u}).stats().stored_pairs, 2 * residual_count(5, 1));
    EXPECT_EQ(FastSSIndex::build(one, {2, 5u}).stats().stored_pairs, 12u);
    for (std::uint32_t m : {1u, 3u, 100u}) {
        EXPECT_EQ(FastSSIndex::build(Dictionary({"a"}), {0, m}).stats().stored_pairs, 1u);
    }
    EXPECT_EQ(FastSSIndex::build(Dictionary({"a"}), {0, std::nullopt}).stats().stored_pairs, 1u);
}

TEST(BuildIndex, split_threshold_is_strict) {
    const Dictionary dict({"abcde"});
    // |w| == m stays whole.
    EXPECT_EQ(FastSSIndex::build(dict, {1, 5u}).stats().stored_pairs, residual_count(5, 1));
    EXPECT_EQ(FastSSIndex::build(dict, {1, 4u}).stats().stored_pairs, residual_count(3, 1) + residual_count(2, 1));
}

TEST(BuildIndex, unsplit_pair_count_is_sum_of_neighborhoods) {
    std::mt19937_64 rng(31);
    const Dictionary dict(random_dictionary(rng, 300, 1, 12, 4));
    for (std::uint32_t d = 0; d <= 3; ++d) {
        std::uint64_t expected = 0;
        for (WordId id = 0; id < dict.size(); ++id) {
            expected += bitmask_neighborhood(std::u32string(dict.chars(id)), d).size();
        }
        EXPECT_EQ(FastSSIndex::build(dict, {d, std::nullopt}).stats().stored_pairs, expected);
    }
}

TEST(BuildIndex, every_word_reachable_from_its_own_keys) {
    std::mt19937_64 rng(32);
    const Dictionary dict(random_dictionary(rng, 200, 1, 14, 5));
    for (std::optional<std::uint32_t> m : {std::optional<std::uint32_t>{}, std::optional<std::uint32_t>{4}}) {
        const auto index = FastSSIndex::build(dict, {2, m});
        for (WordId id = 0; id < dict.size(); ++id) {
            const auto ids = index.candidate_set(dict.chars(id));
            ASSERT_TRUE(std::binary_search(ids.begin(), ids.end(), id));
        }
    }
}

TEST(CandidateSet, filters_unrelated_words) {
    const Dictionary dict({"hello", "world"});
    const auto index = FastSSIndex::build(dict, {1, std::nullopt});
    EXPECT_EQ(index.candidate_set(U"hellp"), std::vector<WordId>{0});
}

TEST(CandidateSet, ids_are_sorted_and_unique) {
    const Dictionary dict({"aaa", "aab", "aba", "baa", "bbb"});
    const auto index = FastSSIndex::build(dict, {2, 2u});
    const auto ids = index.candidate_set(U"aaa");
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(Query, examples) {
    EXPECT_EQ(FastSSIndex::build(Dictionary({"hello"}), {0, std::nullopt}).query("hello"),
              (std::vector<Match>{{0, 0}}));
    const Dictionary dict({"hello", "jello", "world"});
    ASSERT_EQ(full_edit_distance(U"jello", U"hellp"), 2u);
    std::size_t candidates = 0;
    EXPECT_EQ(FastSSIndex::build(dict, {1, std::nullopt}).query("hellp", &candidates), (std::vector<Match>{{0, 1}}));
    EXPECT_GE(candidates, 1u);
}

TEST(Query, results_ordered_by_distance_then_id) {
    const Dictionary dict({"cart", "cat", "bat", "cut", "at"});
    const auto matches = FastSSIndex::build(dict, {1, std::nullopt}).query("cat");
    EXPECT_EQ(matches, (std::vector<Match>{{1, 0}, {0, 1}, {2, 1}, {3, 1}, {4, 1}}));
}

TEST(Query, short_query_reaches_split_word_through_empty_half) {
    // "ab" is split into "a" | "b"; "a" is one deletion away but too short for
    // any cut that leaves both halves non-empty.
    const Dictionary dict({"ab"});
    const auto index = FastSSIndex::build(dict, {1, 1u});
    EXPECT_EQ(index.query("a"), (std::vector<Match>{{0, 1}}));
    EXPECT_EQ(index.query(""), std::vector<Match>{});
    EXPECT_EQ(FastSSIndex::build(dict, {2, 1u}).query(""), (std::vector<Match>{{0, 2}}));
}

TEST(Query, non_ascii_words) {
    const Dictionary dict({"Müller", "Mueller", "Köln", "Koeln"});
    const auto index = FastSSIndex::build(dict, {1, 4u});
    EXPECT_EQ(index.query("Muller"), (std::vector<Match>{{0, 1}, {1, 1}}));
    EXPECT_EQ(index.query("Koln"), (std::vector<Match>{{2, 1}, {3, 1}}));
}

TEST(Query, rejects_invalid_utf8_query) {
    const auto index = FastSSIndex::build(Dictionary({"a"}), {1, std::nullopt});
    EXPECT_THROW(index.query(std::string_view("\xC3")), UsageError);
}

TEST(Query, empty_dictionary) {
    const auto index = FastSSIndex::build(Dictionary(), {2, 3u});
    EXPECT_TRUE(index.query("anything").empty());
    EXPECT_EQ(index.stats().stored_pairs, 0u);
}

// Central property: the filter never loses a match.
TEST(Query, equals_naive_scan_for_all_parameters) {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 6; ++round) {
        const std::uint32_t sigma = round % 2 ? 3 : 8;
        const Dictionary dict(random_dictionary(rng, 150, 1, 12, sigma));
        for (std::uint32_t d = 0; d <= 4; ++d) {
            for (std::optional<std::uint32_t> m :
                 {std::optional<std::uint32_t>{}, std::optional<std::uint32_t>{1}, std::optional<std::uint32_t>{2},
                  std::optional<std::uint32_t>{3}, std::optional<std::uint32_t>{5}, std::optional<std::uint32_t>{8}}) {
                const auto index = FastSSIndex::build(dict, {d, m});
                for (int i = 0; i < 40; ++i) {
                    std::u32string q;
                    if (i % 4 == 0) {
                        q = random_word(rng, 0, 13, sigma);
                    } else {
                        const auto source = std::uniform_int_distribution<WordId>(0, dict.size() - 1)(rng);
                        q = mutate(std::u32string(dict.chars(source)), static_cast<std::uint32_t>(i % (d + 1)), sigma,
                                   rng);
                    }
                    ASSERT_EQ(index.query(q), naive_scan(dict, q, d))
                        << "q=" << utf8::encode(q) << " d=" << d << " m=" << (m ? std::to_string(*m) : "inf");
                }
            }
        }
    }
}

// For w = u . v within distance d of q, some cut of q leaves one half within
// ceil(d/2) of the matching half of w.
TEST(SplitCut, some_cut_matches_one_half) {
    std::mt19937_64 rng(34);
    int checked = 0;
    while (checked < 10000) {
        const std::uint32_t d = static_cast<std::uint32_t>(checked % 5);
        const auto w = random_word(rng, 2, 16, 4);
        const auto q = mutate(w, d, 4, rng);
        if (full_edit_distance(w, q) > d) {
            continue;
        }
        const auto [u, v] = split_word(w);
        const std::uint32_t budget = half_budget(d);
        auto found_with = [&](const std::vector<std::size_t>& cuts) {
            for (std::size_t p : cuts) {
                const std::u32string_view qv(q);
                if (banded_edit_distance(u, qv.substr(0, p), budget) || banded_edit_distance(v, qv.substr(p), budget)) {
                    return true;
                }
            }
            return false;
        };
        ASSERT_TRUE(found_with(probe_positions(q.size(), d))) << utf8::encode(w) << " / " << utf8::encode(q);
        if (w.size() >= 2 * d + 2) {
            // Both halves are longer than d, so no alignment empties one of them.
            ASSERT_TRUE(found_with(split_positions(q.size(), d))) << utf8::encode(w) << " / " << utf8::encode(q);
        }
        ++checked;
    }
}

TEST(Query, repeated_and_concurrent_queries_are_deterministic) {
    std::mt19937_64 rng(35);
    const Dictionary dict(random_dictionary(rng, 500, 3, 12, 6));
    const auto index = FastSSIndex::build(dict, {2, 6u});
    const auto snapshot = index.serialize();

    std::vector<std::u32string> queries;
    std::vector<std::vector<Match>> expected;
    for (int i = 0; i < 200; ++i) {
        queries.push_back(random_word(rng, 2, 12, 6));
        expected.push_back(index.query(queries.back()));
    }
    std::vector<std::thread> threads;
    std::vector<int> failures(4, 0);
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = 0; i < queries.size(); ++i) {
                if (index.query(queries[i]) != expected[i]) {
                    ++failures[t];
                }
            }
        });
    }
    for (auto& th : threads) {
        th.join();
    }
    EXPECT_EQ(failures, std::vector<int>(4, 0));
    EXPECT_EQ(index.serialize(), snapshot);
}
