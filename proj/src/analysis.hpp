// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>

namespace fastss {

// Random dictionary of n words drawn uniformly from an alphabet of sigma
// letters, all of length ell, queried with distance d and no splitting.
struct CollisionModel {
    std::uint64_t n = 0;
    std::uint32_t ell = 0;
    std::uint32_t d = 0;
    std::uint32_t sigma = 1;

    // Throws UsageError unless d <= ell and sigma >= 1.
    void validate() const;
};

// Expected number of residual collisions, n * C(ell, d)^2 * sigma^(d - ell).
// Binomials and powers are exact big integers; only the final quotient is rounded.
double expected_candidates(const CollisionModel& model);

// Markov bound on P[X >= n / c]: C(ell, d)^2 * sigma^(d - ell) / c. Requires c > 0.
double markov_bound(const CollisionModel& model, double c);

}
