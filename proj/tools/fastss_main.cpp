// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
//
// fastss build | query | bench | compare | expect
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fastss/fastss.h"

namespace {

struct Freer {
    void operator()(fss_dictionary* p) const { fss_dictionary_free(p); }
    void operator()(fss_index* p) const { fss_index_free(p); }
    void operator()(fss_matches* p) const { fss_matches_free(p); }
    void operator()(fss_workload* p) const { fss_workload_free(p); }
    void operator()(fss_report* p) const { fss_report_free(p); }
};

template <typename T>
using Handle = std::unique_ptr<T, Freer>;

// Thrown to unwind with the library's status as the exit code.
struct Failure {
    fss_status status;
};

void check(fss_status status) {
    if (status != FSS_OK) {
        std::fprintf(stderr, "fastss: %s: %s\n", fss_status_name(status), fss_last_error());
        throw Failure{status};
    }
}

Handle<fss_dictionary> load_dictionary(const std::string& path) {
    fss_dictionary* dict = nullptr;
    check(fss_dictionary_load(path.c_str(), &dict));
    return Handle<fss_dictionary>(dict);
}

std::string dataset_name(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

const char* method_label(fss_method method) {
    switch (method) {
    case FSS_METHOD_NAIVE:
        return "naive";
    case FSS_METHOD_BKTREE:
        return "bktree";
    case FSS_METHOD_FASTSS:
        return "fastss";
    }
    return "?";
}

void print_report(const fss_report* report) {
    std::printf("%-8s %5s %8s %12s %10s %12s %12s %12s %10s\n", "method", "d", "m", "pairs", "build_ms",
                "mean_us", "median_us", "mean_cand", "matches");
    for (size_t i = 0; i < fss_report_size(report); ++i) {
        fss_report_row row;
        check(fss_report_get(report, i, &row));
        std::string m = "-";
        if (row.method == FSS_METHOD_FASTSS) {
            m = row.split_threshold == FSS_NO_SPLIT ? "inf" : std::to_string(row.split_threshold);
        }
        std::printf("%-8s %5u %8s %12llu %10.2f %12.2f %12.2f %12.3f %10.3f\n", method_label(row.method), row.d,
                    m.c_str(), static_cast<unsigned long long>(row.stored_pairs), row.build_ms, row.mean_query_us,
                    row.median_query_us, row.mean_cand, row.mean_matches);
    }
}

}

int main(int argc, char** argv) {
    CLI::App app{"Lossless approximate dictionary matching with deletion-neighborhood indexes"};
    app.require_subcommand(1);

    std::string dict_path;
    std::string index_path;
    std::string out_path;
    std::string csv_path;
    std::string word;
    std::uint32_t d = 0;
    std::uint32_t m = 0;
    std::size_t queries = 1000;
    std::uint64_t seed = 1;

    auto* build = app.add_subcommand("build", "Build an index file from a word list");
    build->add_option("--dict", dict_path, "Word list, one UTF-8 word per line")->required();
    build->add_option("--d", d, "Maximum edit distance")->required();
    auto* build_m = build->add_option("--m", m, "Split words longer than this")->check(CLI::Range(1u, FSS_NO_SPLIT - 1));
    auto* build_no_split = build->add_flag("--no-split", "Never split words");
    build_m->excludes(build_no_split);
    build->add_option("--out", out_path, "Index file to write")->required();

    auto* query = app.add_subcommand("query", "Look up one word in an index");
    query->add_option("--index", index_path, "Index file")->required();
    query->add_option("--dict", dict_path, "Word list the index was built from")->required();
    query->add_option("--word", word, "Query word")->required();

    auto* bench = app.add_subcommand("bench", "Benchmark one index configuration");
    bench->add_option("--dict", dict_path, "Word list")->required();
    bench->add_option("--d", d, "Maximum edit distance")->required();
    auto* bench_m = bench->add_option("--m", m, "Split words longer than this")->check(CLI::Range(1u, FSS_NO_SPLIT - 1));
    auto* bench_no_split = bench->add_flag("--no-split", "Never split words");
    bench_m->excludes(bench_no_split);
    bench->add_option("--queries", queries, "Number of perturbed queries");
    bench->add_option("--seed", seed, "Workload seed");
    bench->add_option("--csv", csv_path, "CSV report to write")->required();

    auto* compare = app.add_subcommand("compare", "Compare naive scan, BK-tree and FastSS on one workload");
    compare->add_option("--dict", dict_path, "Word list")->required();
    compare->add_option("--d", d, "Maximum edit distance")->required();
    compare->add_option("--queries", queries, "Number of perturbed queries");
    compare->add_option("--seed", seed, "Workload seed");
    compare->add_option("--csv", csv_path, "CSV report to write")->required();

    std::uint64_t n = 0;
    std::uint32_t length = 0;
    std::uint32_t sigma = 26;
    std::optional<double> c;
    auto* expect = app.add_subcommand("expect", "Expected candidate count for a uniform random dictionary");
    expect->add_option("--n", n, "Dictionary size")->required();
    expect->add_option("--len", length, "Word length")->required();
    expect->add_option("--d", d, "Maximum edit distance")->required();
    expect->add_option("--sigma", sigma, "Alphabet size")->required();
    expect->add_option("--c", c, "Markov constant; also prints P[X >= n/c] bound");

    CLI11_PARSE(app, argc, argv);

    auto split_threshold = [&](CLI::Option* m_option, CLI::Option* no_split) -> std::uint32_t {
        if (no_split->count() > 0) {
            return FSS_NO_SPLIT;
        }
        if (m_option->count() == 0) {
            throw CLI::RequiredError("--m or --no-split");
        }
        return m;
    };

    try {
        if (*build) {
            const std::uint32_t threshold = split_threshold(build_m, build_no_split);
            auto dict = load_dictionary(dict_path);
            fss_index* raw = nullptr;
            check(fss_index_build(dict.get(), d, threshold, &raw));
            Handle<fss_index> index(raw);
            check(fss_index_save(index.get(), out_path.c_str()));
            fss_index_info info;
            check(fss_index_info_get(index.get(), &info));
            std::printf("words=%llu d=%u m=%s stored_pairs=%llu distinct_keys=%llu\n",
                        static_cast<unsigned long long>(info.word_count), info.max_distance,
                        info.split_threshold == FSS_NO_SPLIT ? "inf" : std::to_string(info.split_threshold).c_str(),
                        static_cast<unsigned long long>(info.stored_pairs),
                        static_cast<unsigned long long>(info.distinct_keys));
        } else if (*query) {
            fss_index* raw = nullptr;
            check(fss_index_load(index_path.c_str(), &raw));
            Handle<fss_index> index(raw);
            auto dict = load_dictionary(dict_path);
            const fss_dictionary* stored = fss_index_dictionary(index.get());
            bool same = fss_dictionary_size(stored) == fss_dictionary_size(dict.get());
            for (std::uint32_t i = 0; same && i < fss_dictionary_size(stored); ++i) {
                same = std::string(fss_dictionary_word(stored, i)) == fss_dictionary_word(dict.get(), i);
            }
            if (!same) {
                std::fprintf(stderr, "fastss: usage error: '%s' is not the word list index '%s' was built from\n",
                             dict_path.c_str(), index_path.c_str());
                return FSS_ERR_USAGE;
            }
            fss_matches* found = nullptr;
            size_t candidates = 0;
            check(fss_index_query(index.get(), word.c_str(), &found, &candidates));
            Handle<fss_matches> matches(found);
            for (size_t i = 0; i < fss_matches_size(matches.get()); ++i) {
                fss_match match;
                check(fss_matches_get(matches.get(), i, &match));
                std::printf("%u\t%u\t%s\n", match.word_id, match.distance, fss_dictionary_word(dict.get(), match.word_id));
            }
            std::fprintf(stderr, "%zu matches from %zu candidates\n", fss_matches_size(matches.get()), candidates);
        } else if (*bench || *compare) {
            const std::uint32_t threshold = *bench ? split_threshold(bench_m, bench_no_split) : FSS_NO_SPLIT;
            auto dict = load_dictionary(dict_path);
            fss_workload* raw_workload = nullptr;
            check(fss_workload_perturb(dict.get(), queries, d, seed, &raw_workload));
            Handle<fss_workload> workload(raw_workload);
            fss_report* raw_report = nullptr;
            const std::string dataset = dataset_name(dict_path);
            if (*bench) {
                check(fss_bench_run(dict.get(), dataset.c_str(), d, threshold, workload.get(), &raw_report));
            } else {
                check(fss_compare_run(dict.get(), dataset.c_str(), d, workload.get(), &raw_report));
            }
            Handle<fss_report> report(raw_report);
            check(fss_report_write_csv(report.get(), csv_path.c_str()));
            std::printf("dataset=%s n=%zu queries=%zu seed=%llu\n", dataset.c_str(), fss_dictionary_size(dict.get()),
                        queries, static_cast<unsigned long long>(seed));
            print_report(report.get());
        } else if (*expect) {
            double expected = 0.0;
            check(fss_expected_candidates(n, length, d, sigma, &expected));
            std::printf("expected_candidates=%.10g\n", expected);
            if (c) {
                double bound = 0.0;
                check(fss_markov_bound(length, d, sigma, *c, &bound));
                std::printf("markov_bound=%.10g\n", bound);
            }
        }
    } catch (const Failure& failure) {
        return failure.status;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
    return 0;
}
