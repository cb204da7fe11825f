// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dictionary.hpp"

namespace fastss {

struct WorkloadQuery {
    std::u32string word;
    WordId source = 0;
    std::uint32_t errors = 0;  // edit operations applied; the true distance may be lower
};

struct Workload {
    std::uint64_t seed = 0;
    std::uint32_t max_errors = 0;
    std::vector<WorkloadQuery> queries;
};

// Draws `count` dictionary words with replacement and applies k ~ U{0..d}
// random edits to each. An edit is an insert, delete or substitute chosen
// uniformly, at a uniform position, with a uniform letter from a-z. Deleting
// from an empty word inserts instead. Deterministic for a given seed.
// Throws UsageError on an empty dictionary.
Workload perturb(const Dictionary& dict, std::size_t count, std::uint32_t d, std::uint64_t seed);

}
