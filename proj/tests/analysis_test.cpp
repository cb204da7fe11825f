// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "analysis.hpp"
#include "errors.hpp"
#include "index.hpp"
#include "support/oracles.hpp"

using namespace fastss;
using namespace fastss::testing;

TEST(ExpectedCandidates, zero_distance_is_exact_match_probability) {
    EXPECT_DOUBLE_EQ(expected_candidates({1000, 3, 0, 10}), 1.0);
    EXPECT_DOUBLE_EQ(expected_candidates({123, 9, 0, 26}), 123.0 / std::pow(26.0, 9));
}

TEST(ExpectedCandidates, full_deletion_collides_everywhere) {
    EXPECT_DOUBLE_EQ(expected_candidates({1000, 12, 12, 7}), 1000.0);
}

TEST(ExpectedCandidates, reference_values) {
    // Exact rationals evaluated with Python's fractions module.
    EXPECT_NEAR(expected_candidates({10000, 8, 2, 26}), 0.025379085851542915, 1e-15);
    EXPECT_DOUBLE_EQ(expected_candidates({5, 6, 3, 4}), 31.25);
    EXPECT_NEAR(expected_candidates({123, 9, 0, 26}), 2.2654004357023975e-11, 1e-24);
}

TEST(ExpectedCandidates, does_not_overflow_large_models) {
    const double e = expected_candidates({1000000, 60, 4, 26});
    EXPECT_TRUE(std::isfinite(e));
    EXPECT_GT(e, 0.0);
}

TEST(ExpectedCandidates, monotone_in_n_and_small_d) {
    for (std::uint32_t d = 0; d + 1 <= 6; ++d) {
        EXPECT_LE(expected_candidates({100, 12, d, 26}), expected_candidates({101, 12, d, 26}));
        EXPECT_LE(expected_candidates({100, 12, d, 26}), expected_candidates({100, 12, d + 1, 26}));
    }
}

TEST(ExpectedCandidates, rejects_invalid_models) {
    EXPECT_THROW(expected_candidates({10, 3, 4, 26}), UsageError);
    EXPECT_THROW(expected_candidates({10, 3, 1, 0}), UsageError);
}

TEST(MarkovBound, examples) {
    EXPECT_DOUBLE_EQ(markov_bound({0, 5, 5, 26}, 1.0), 1.0);
    EXPECT_NEAR(markov_bound({0, 8, 2, 26}, 10.0), 2.537908585154291e-07, 1e-20);
    EXPECT_NEAR(markov_bound({0, 12, 4, 5}, 3.0), 0.209088, 1e-15);
    EXPECT_NEAR(markov_bound({0, 8, 2, 26}, 2.0), markov_bound({0, 8, 2, 26}, 1.0) / 2.0, 1e-20);
    EXPECT_THROW(markov_bound({0, 8, 2, 26}, 0.0), UsageError);
    EXPECT_THROW(markov_bound({0, 8, 2, 26}, -1.0), UsageError);
}

TEST(MarkovBound, expected_value_is_n_times_unit_bound) {
    for (std::uint64_t n : {1ull, 17ull, 10000ull}) {
        const CollisionModel model{n, 10, 3, 20};
        EXPECT_NEAR(expected_candidates(model), static_cast<double>(n) * markov_bound(model, 1.0),
                    1e-12 * expected_candidates(model));
    }
}

// Residual dedup makes the model an overestimate on random dictionaries.
TEST(ExpectedCandidates, observed_mean_stays_below_model) {
    std::mt19937_64 rng(61);
    const Dictionary dict(random_dictionary(rng, 3000, 5, 5, 8));
    const auto index = FastSSIndex::build(dict, {1, std::nullopt});
    double total = 0.0;
    const int queries = 500;
    for (int i = 0; i < queries; ++i) {
        total += static_cast<double>(index.candidate_set(random_word(rng, 5, 5, 8)).size());
    }
    EXPECT_LE(total / queries, expected_candidates({dict.size(), 5, 1, 8}));
}
