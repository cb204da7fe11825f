// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "workload.hpp"

#include <random>

#include "errors.hpp"

namespace fastss {

namespace {

enum class Edit { Insert, Delete, Substitute };

char32_t random_letter(std::mt19937_64& rng) {
    return U'a' + static_cast<char32_t>(std::uniform_int_distribution<int>(0, 25)(rng));
}

void apply_random_edit(std::u32string& word, std::mt19937_64& rng) {
    auto edit = static_cast<Edit>(std::uniform_int_distribution<int>(0, 2)(rng));
    if (word.empty()) {
        edit = Edit::Insert;
    }
    switch (edit) {
    case Edit::Insert: {
        const auto at = std::uniform_int_distribution<std::size_t>(0, word.size())(rng);
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(at), random_letter(rng));
        break;
    }
    case Edit::Delete: {
        const auto at = std::uniform_int_distribution<std::size_t>(0, word.size() - 1)(rng);
        word.erase(at, 1);
        break;
    }
    case Edit::Substitute: {
        const auto at = std::uniform_int_distribution<std::size_t>(0, word.size() - 1)(rng);
        word[at] = random_letter(rng);
        break;
    }
    }
}

}

Workload perturb(const Dictionary& dict, std::size_t count, std::uint32_t d, std::uint64_t seed) {
    if (dict.empty()) {
        throw UsageError("cannot generate queries from an empty dictionary");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<WordId> pick(0, static_cast<WordId>(dict.size() - 1));
    std::uniform_int_distribution<std::uint32_t> how_many(0, d);

    Workload workload{seed, d, {}};
    workload.queries.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        WorkloadQuery q;
        q.source = pick(rng);
        q.errors = how_many(rng);
        q.word = std::u32string(dict.chars(q.source));
        for (std::uint32_t e = 0; e < q.errors; ++e) {
            apply_random_edit(q.word, rng);
        }
        workload.queries.push_back(std::move(q));
    }
    return workload;
}

}
