// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dictionary.hpp"
#include "index.hpp"
#include "workload.hpp"

namespace fastss {

enum class Method { Naive, BKTree, FastSS };

std::string_view method_name(Method method);

// One configuration's aggregates. Counts are exact; times are wall clock.
struct BenchRow {
    std::string dataset;
    std::uint64_t n = 0;
    std::uint32_t d = 0;
    Method method = Method::FastSS;
    // Split threshold, FastSS rows only (nullopt there means no splitting).
    std::optional<std::uint32_t> m;
    std::uint64_t stored_pairs = 0;
    std::uint64_t distinct_keys = 0;
    double build_ms = 0.0;
    double mean_query_us = 0.0;
    double median_query_us = 0.0;
    // FastSS: candidate-set size. BK-tree: distance computations. Naive: n.
    double mean_cand = 0.0;
    double mean_matches = 0.0;
    std::uint64_t seed = 0;
};

// Builds an index, times every workload query and checks each result against
// naive_scan. Throws LosslessnessError naming the query, d, m and seed on the
// first disagreement.
BenchRow run_benchmark(const Dictionary& dict, std::string_view dataset, const IndexParams& params,
                       const Workload& workload);

// Query half of run_benchmark against an existing index, checked against a
// naive scan of the index's own dictionary.
BenchRow benchmark_index(const FastSSIndex& index, std::string_view dataset, const Workload& workload,
                         double build_ms = 0.0);

// Naive scan, BK-tree, FastSS without splitting and FastSS split at the
// rounded average word length, on one shared workload. All four must return
// identical matches for every query or LosslessnessError is thrown.
std::vector<BenchRow> compare_baselines(const Dictionary& dict, std::string_view dataset, std::uint32_t d,
                                        const Workload& workload);

// Split threshold used by compare_baselines: average length rounded, at least 1.
std::uint32_t average_length_threshold(const Dictionary& dict);

inline constexpr std::string_view kCsvHeader =
    "dataset,n,d,m,stored_pairs,distinct_keys,build_ms,mean_query_us,mean_cand,mean_matches,method,seed";

// Header line followed by one line per row. m is "inf" for unsplit FastSS
// and empty for the baselines.
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}
