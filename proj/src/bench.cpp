// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "baselines.hpp"
#include "errors.hpp"
#include "utf8.hpp"

namespace fastss {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point start) {
    return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

double mean(const std::vector<double>& values) {
    if (values.empty()) {
        return 0.0;
    }
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    return total / static_cast<double>(values.size());
}

double median(std::vector<double> values) {
    if (values.empty()) {
        return 0.0;
    }
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    const double upper = values[mid];
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
}

std::string describe_m(const std::optional<std::uint32_t>& m) {
    return m ? std::to_string(*m) : std::string("inf");
}

[[noreturn]] void report_violation(const WorkloadQuery& q, std::size_t index, std::string_view method,
                                   std::uint32_t d, const std::optional<std::uint32_t>& m, std::uint64_t seed,
                                   std::size_t got, std::size_t expected) {
    throw LosslessnessError("losslessness violation: query #" + std::to_string(index) + " '" + utf8::encode(q.word) +
                            "' (source word " + std::to_string(q.source) + ") method=" + std::string(method) +
                            " d=" + std::to_string(d) + " m=" + describe_m(m) + " seed=" + std::to_string(seed) +
                            ": " + std::to_string(got) + " matches vs " + std::to_string(expected) +
                            " from naive scan");
}

struct Timings {
    std::vector<double> query_us;
    double candidates = 0.0;
    double matches = 0.0;

    void fill(BenchRow& row, std::size_t queries) const {
        row.mean_query_us = mean(query_us);
        row.median_query_us = median(query_us);
        const double denominator = queries == 0 ? 1.0 : static_cast<double>(queries);
        row.mean_cand = candidates / denominator;
        row.mean_matches = matches / denominator;
    }
};

BenchRow fastss_row(const FastSSIndex& index, std::string_view dataset, double build_ms, const Workload& workload) {
    BenchRow row;
    row.dataset = dataset;
    row.n = index.dictionary().size();
    row.d = index.params().max_distance;
    row.method = Method::FastSS;
    row.m = index.params().split_threshold;
    row.stored_pairs = index.stats().stored_pairs;
    row.distinct_keys = index.stats().distinct_keys;
    row.build_ms = build_ms;
    row.seed = workload.seed;
    return row;
}

std::pair<FastSSIndex, double> timed_build(const Dictionary& dict, const IndexParams& params) {
    const auto start = Clock::now();
    FastSSIndex index = FastSSIndex::build(dict, params);
    return {std::move(index), elapsed_us(start) / 1000.0};
}

}

std::string_view method_name(Method method) {
    switch (method) {
    case Method::Naive:
        return "naive";
    case Method::BKTree:
        return "bktree";
    case Method::FastSS:
        return "fastss";
    }
    return "unknown";
}

std::uint32_t average_length_threshold(const Dictionary& dict) {
    return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::lround(dict.average_length())));
}

BenchRow run_benchmark(const Dictionary& dict, std::string_view dataset, const IndexParams& params,
                       const Workload& workload) {
    const auto [index, build_ms] = timed_build(dict, params);
    return benchmark_index(index, dataset, workload, build_ms);
}

BenchRow benchmark_index(const FastSSIndex& index, std::string_view dataset, const Workload& workload,
                         double build_ms) {
    const IndexParams& params = index.params();
    BenchRow row = fastss_row(index, dataset, build_ms, workload);

    Timings t;
    t.query_us.reserve(workload.queries.size());
    for (std::size_t i = 0; i < workload.queries.size(); ++i) {
        const WorkloadQuery& q = workload.queries[i];
        std::size_t candidates = 0;
        const auto start = Clock::now();
        const auto matches = index.query(q.word, &candidates);
        t.query_us.push_back(elapsed_us(start));
        t.candidates += static_cast<double>(candidates);
        t.matches += static_cast<double>(matches.size());

        const auto expected = naive_scan(index.dictionary(), q.word, params.max_distance);
        if (matches != expected) {
            report_violation(q, i, "fastss", params.max_distance, params.split_threshold, workload.seed,
                             matches.size(), expected.size());
        }
    }
    t.fill(row, workload.queries.size());
    return row;
}

std::vector<BenchRow> compare_baselines(const Dictionary& dict, std::string_view dataset, std::uint32_t d,
                                        const Workload& workload) {
    if (dict.empty()) {
        throw UsageError("cannot compare methods on an empty dictionary");
    }
    const std::size_t queries = workload.queries.size();

    BenchRow naive_row;
    naive_row.dataset = dataset;
    naive_row.n = dict.size();
    naive_row.d = d;
    naive_row.method = Method::Naive;
    naive_row.seed = workload.seed;

    std::vector<std::vector<Match>> truth;
    truth.reserve(queries);
    {
        Timings t;
        for (const WorkloadQuery& q : workload.queries) {
            const auto start = Clock::now();
            truth.push_back(naive_scan(dict, q.word, d));
            t.query_us.push_back(elapsed_us(start));
            t.candidates += static_cast<double>(dict.size());
            t.matches += static_cast<double>(truth.back().size());
        }
        t.fill(naive_row, queries);
    }

    BenchRow bk_row = naive_row;
    bk_row.method = Method::BKTree;
    {
        const auto start = Clock::now();
        const BKTree tree(dict);
        bk_row.build_ms = elapsed_us(start) / 1000.0;
        Timings t;
        for (std::size_t i = 0; i < queries; ++i) {
            const auto query_start = Clock::now();
            const auto result = tree.query(workload.queries[i].word, d);
            t.query_us.push_back(elapsed_us(query_start));
            t.candidates += static_cast<double>(result.distance_computations);
            t.matches += static_cast<double>(result.matches.size());
            if (result.matches != truth[i]) {
                report_violation(workload.queries[i], i, "bktree", d, std::nullopt, workload.seed,
                                 result.matches.size(), truth[i].size());
            }
        }
        t.fill(bk_row, queries);
    }

    std::vector<BenchRow> rows{naive_row, bk_row};
    for (std::optional<std::uint32_t> m : {std::optional<std::uint32_t>{}, std::optional(average_length_threshold(dict))}) {
        const IndexParams params{d, m};
        auto [index, build_ms] = timed_build(dict, params);
        BenchRow row = fastss_row(index, dataset, build_ms, workload);
        Timings t;
        for (std::size_t i = 0; i < queries; ++i) {
            std::size_t candidates = 0;
            const auto start = Clock::now();
            const auto matches = index.query(workload.queries[i].word, &candidates);
            t.query_us.push_back(elapsed_us(start));
            t.candidates += static_cast<double>(candidates);
            t.matches += static_cast<double>(matches.size());
            if (matches != truth[i]) {
                report_violation(workload.queries[i], i, "fastss", d, m, workload.seed, matches.size(),
                                 truth[i].size());
            }
        }
        t.fill(row, queries);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kCsvHeader << '\n';
    char numbers[160];
    for (const BenchRow& row : rows) {
        std::string m;
        if (row.method == Method::FastSS) {
            m = describe_m(row.m);
        }
        std::snprintf(numbers, sizeof numbers, "%.3f,%.3f,%.4f,%.4f", row.build_ms, row.mean_query_us, row.mean_cand,
                      row.mean_matches);
        out << row.dataset << ',' << row.n << ',' << row.d << ',' << m << ',' << row.stored_pairs << ','
            << row.distinct_keys << ',' << numbers << ',' << method_name(row.method) << ',' << row.seed << '\n';
    }
}

}
