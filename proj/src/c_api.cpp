// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "fastss/fastss.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <string>

#include "analysis.hpp"
#include "baselines.hpp"
#include "bench.hpp"
#include "dictionary.hpp"
#include "edit_distance.hpp"
#include "errors.hpp"
#include "index.hpp"
#include "neighborhood.hpp"
#include "utf8.hpp"
#include "workload.hpp"

struct fss_dictionary {
    std::optional<fastss::Dictionary> owned;
    const fastss::Dictionary* ref = nullptr;
};

struct fss_index {
    explicit fss_index(fastss::FastSSIndex i) : index(std::move(i)) { dict.ref = &index.dictionary(); }
    fastss::FastSSIndex index;
    fss_dictionary dict;
};

struct fss_matches {
    std::vector<fastss::Match> items;
};

struct fss_bktree {
    fastss::BKTree tree;
};

struct fss_workload {
    fastss::Workload workload;
    std::vector<std::string> text;
};

struct fss_report {
    std::vector<fastss::BenchRow> rows;
};

namespace {

thread_local std::string last_error;

fss_status fail(fss_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename Body>
fss_status guarded(Body&& body) noexcept {
    try {
        body();
        return FSS_OK;
    } catch (const fastss::UsageError& e) {
        return fail(FSS_ERR_USAGE, e.what());
    } catch (const fastss::InputError& e) {
        return fail(FSS_ERR_INPUT, e.what());
    } catch (const fastss::FormatError& e) {
        return fail(FSS_ERR_FORMAT, e.what());
    } catch (const fastss::LosslessnessError& e) {
        return fail(FSS_ERR_LOSSLESS, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FSS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FSS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FSS_ERR_INTERNAL, "unknown error");
    }
}

void require(bool condition, const char* message) {
    if (!condition) {
        throw fastss::UsageError(message);
    }
}

std::optional<std::uint32_t> threshold_from(std::uint32_t split_threshold) {
    if (split_threshold == FSS_NO_SPLIT) {
        return std::nullopt;
    }
    return split_threshold;
}

std::u32string decode_arg(const char* text) {
    require(text != nullptr, "null string argument");
    return fastss::utf8::decode_or_throw(text);
}

}

extern "C" {

const char* fss_last_error(void) {
    return last_error.c_str();
}

const char* fss_status_name(fss_status status) {
    switch (status) {
    case FSS_OK:
        return "ok";
    case FSS_ERR_USAGE:
        return "usage error";
    case FSS_ERR_INPUT:
        return "input error";
    case FSS_ERR_FORMAT:
        return "format error";
    case FSS_ERR_LOSSLESS:
        return "losslessness violation";
    case FSS_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

fss_status fss_edit_distance(const char* a, const char* b, uint32_t* distance) {
    return guarded([&] {
        require(distance != nullptr, "null output pointer");
        *distance = fastss::full_edit_distance(decode_arg(a), decode_arg(b));
    });
}

fss_status fss_banded_distance(const char* a, const char* b, uint32_t bound, int* within, uint32_t* distance) {
    return guarded([&] {
        require(within != nullptr && distance != nullptr, "null output pointer");
        const auto outcome = fastss::banded_edit_distance(decode_arg(a), decode_arg(b), bound);
        *within = outcome.has_value() ? 1 : 0;
        if (outcome) {
            *distance = *outcome;
        }
    });
}

fss_status fss_residual_key(uint8_t tag, const char* residual, uint64_t* key) {
    return guarded([&] {
        require(key != nullptr, "null output pointer");
        require(tag <= 2, "residual tag must be 0, 1 or 2");
        *key = fastss::hash_residual(static_cast<fastss::HalfTag>(tag), decode_arg(residual));
    });
}

fss_status fss_dictionary_create(const char* const* words, size_t count, fss_dictionary** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        require(words != nullptr || count == 0, "null word array");
        std::vector<std::string> list;
        list.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            require(words[i] != nullptr, "null word");
            list.emplace_back(words[i]);
        }
        auto handle = std::make_unique<fss_dictionary>();
        handle->owned.emplace(std::move(list));
        handle->ref = &*handle->owned;
        *out = handle.release();
    });
}

fss_status fss_dictionary_load(const char* path, fss_dictionary** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        auto handle = std::make_unique<fss_dictionary>();
        handle->owned.emplace(fastss::load_dictionary(path));
        handle->ref = &*handle->owned;
        *out = handle.release();
    });
}

void fss_dictionary_free(fss_dictionary* dict) {
    // Borrowed views handed out by fss_index_dictionary are not freed here.
    if (dict && dict->owned) {
        delete dict;
    }
}

size_t fss_dictionary_size(const fss_dictionary* dict) {
    return dict ? dict->ref->size() : 0;
}

const char* fss_dictionary_word(const fss_dictionary* dict, uint32_t id) {
    if (!dict || id >= dict->ref->size()) {
        return nullptr;
    }
    return dict->ref->word(id).c_str();
}

double fss_dictionary_average_length(const fss_dictionary* dict) {
    return dict ? dict->ref->average_length() : 0.0;
}

fss_status fss_index_build(const fss_dictionary* dict, uint32_t max_distance, uint32_t split_threshold,
                           fss_index** out) {
    return guarded([&] {
        require(dict != nullptr && out != nullptr, "null argument");
        fastss::IndexParams params{max_distance, threshold_from(split_threshold)};
        *out = new fss_index(fastss::FastSSIndex::build(*dict->ref, params));
    });
}

fss_status fss_index_save(const fss_index* index, const char* path) {
    return guarded([&] {
        require(index != nullptr && path != nullptr, "null argument");
        index->index.save(path);
    });
}

fss_status fss_index_load(const char* path, fss_index** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new fss_index(fastss::FastSSIndex::load(path));
    });
}

fss_status fss_index_serialize(const fss_index* index, uint8_t** out, size_t* size) {
    return guarded([&] {
        require(index != nullptr && out != nullptr && size != nullptr, "null argument");
        const auto bytes = index->index.serialize();
        auto* buffer = static_cast<uint8_t*>(std::malloc(bytes.empty() ? 1 : bytes.size()));
        if (!buffer) {
            throw std::bad_alloc();
        }
        std::memcpy(buffer, bytes.data(), bytes.size());
        *out = buffer;
        *size = bytes.size();
    });
}

fss_status fss_index_deserialize(const uint8_t* bytes, size_t size, fss_index** out) {
    return guarded([&] {
        require(out != nullptr && (bytes != nullptr || size == 0), "null argument");
        *out = new fss_index(fastss::FastSSIndex::deserialize(std::span<const std::uint8_t>(bytes, size)));
    });
}

void fss_bytes_free(uint8_t* bytes) {
    std::free(bytes);
}

void fss_index_free(fss_index* index) {
    delete index;
}

fss_status fss_index_info_get(const fss_index* index, fss_index_info* out) {
    return guarded([&] {
        require(index != nullptr && out != nullptr, "null argument");
        const auto& params = index->index.params();
        out->max_distance = params.max_distance;
        out->split_threshold = params.split_threshold.value_or(FSS_NO_SPLIT);
        out->word_count = index->index.dictionary().size();
        out->stored_pairs = index->index.stats().stored_pairs;
        out->distinct_keys = index->index.stats().distinct_keys;
    });
}

const fss_dictionary* fss_index_dictionary(const fss_index* index) {
    return index ? &index->dict : nullptr;
}

int fss_index_equal(const fss_index* a, const fss_index* b) {
    if (!a || !b) {
        return 0;
    }
    return a->index == b->index ? 1 : 0;
}

fss_status fss_index_query(const fss_index* index, const char* word, fss_matches** out, size_t* candidates) {
    return guarded([&] {
        require(index != nullptr && out != nullptr, "null argument");
        const auto q = decode_arg(word);
        auto result = std::make_unique<fss_matches>();
        result->items = index->index.query(std::u32string_view(q), candidates);
        *out = result.release();
    });
}

fss_status fss_naive_scan(const fss_dictionary* dict, const char* word, uint32_t max_distance, fss_matches** out) {
    return guarded([&] {
        require(dict != nullptr && out != nullptr, "null argument");
        auto result = std::make_unique<fss_matches>();
        result->items = fastss::naive_scan(*dict->ref, decode_arg(word), max_distance);
        *out = result.release();
    });
}

size_t fss_matches_size(const fss_matches* matches) {
    return matches ? matches->items.size() : 0;
}

fss_status fss_matches_get(const fss_matches* matches, size_t i, fss_match* out) {
    return guarded([&] {
        require(matches != nullptr && out != nullptr, "null argument");
        require(i < matches->items.size(), "match index out of range");
        out->word_id = matches->items[i].word_id;
        out->distance = matches->items[i].distance;
    });
}

void fss_matches_free(fss_matches* matches) {
    delete matches;
}

fss_status fss_bktree_build(const fss_dictionary* dict, fss_bktree** out) {
    return guarded([&] {
        require(dict != nullptr && out != nullptr, "null argument");
        *out = new fss_bktree{fastss::BKTree(*dict->ref)};
    });
}

fss_status fss_bktree_query(const fss_bktree* tree, const char* word, uint32_t max_distance, fss_matches** out,
                            uint64_t* distance_computations) {
    return guarded([&] {
        require(tree != nullptr && out != nullptr, "null argument");
        auto result = tree->tree.query(decode_arg(word), max_distance);
        if (distance_computations) {
            *distance_computations = result.distance_computations;
        }
        *out = new fss_matches{std::move(result.matches)};
    });
}

void fss_bktree_free(fss_bktree* tree) {
    delete tree;
}

fss_status fss_workload_perturb(const fss_dictionary* dict, size_t count, uint32_t max_errors, uint64_t seed,
                                fss_workload** out) {
    return guarded([&] {
        require(dict != nullptr && out != nullptr, "null argument");
        auto handle = std::make_unique<fss_workload>();
        handle->workload = fastss::perturb(*dict->ref, count, max_errors, seed);
        handle->text.reserve(handle->workload.queries.size());
        for (const auto& q : handle->workload.queries) {
            handle->text.push_back(fastss::utf8::encode(q.word));
        }
        *out = handle.release();
    });
}

size_t fss_workload_size(const fss_workload* workload) {
    return workload ? workload->workload.queries.size() : 0;
}

fss_status fss_workload_get(const fss_workload* workload, size_t i, const char** word, uint32_t* source,
                            uint32_t* errors) {
    return guarded([&] {
        require(workload != nullptr, "null argument");
        require(i < workload->workload.queries.size(), "workload index out of range");
        if (word) {
            *word = workload->text[i].c_str();
        }
        if (source) {
            *source = workload->workload.queries[i].source;
        }
        if (errors) {
            *errors = workload->workload.queries[i].errors;
        }
    });
}

void fss_workload_free(fss_workload* workload) {
    delete workload;
}

fss_status fss_bench_run(const fss_dictionary* dict, const char* dataset, uint32_t max_distance,
                         uint32_t split_threshold, const fss_workload* workload, fss_report** out) {
    return guarded([&] {
        require(dict != nullptr && dataset != nullptr && workload != nullptr && out != nullptr, "null argument");
        fastss::IndexParams params{max_distance, threshold_from(split_threshold)};
        auto report = std::make_unique<fss_report>();
        report->rows.push_back(fastss::run_benchmark(*dict->ref, dataset, params, workload->workload));
        *out = report.release();
    });
}

fss_status fss_compare_run(const fss_dictionary* dict, const char* dataset, uint32_t max_distance,
                           const fss_workload* workload, fss_report** out) {
    return guarded([&] {
        require(dict != nullptr && dataset != nullptr && workload != nullptr && out != nullptr, "null argument");
        auto report = std::make_unique<fss_report>();
        report->rows = fastss::compare_baselines(*dict->ref, dataset, max_distance, workload->workload);
        *out = report.release();
    });
}

size_t fss_report_size(const fss_report* report) {
    return report ? report->rows.size() : 0;
}

fss_status fss_report_get(const fss_report* report, size_t i, fss_report_row* out) {
    return guarded([&] {
        require(report != nullptr && out != nullptr, "null argument");
        require(i < report->rows.size(), "report row out of range");
        const auto& row = report->rows[i];
        out->dataset = row.dataset.c_str();
        out->n = row.n;
        out->d = row.d;
        switch (row.method) {
        case fastss::Method::Naive:
            out->method = FSS_METHOD_NAIVE;
            break;
        case fastss::Method::BKTree:
            out->method = FSS_METHOD_BKTREE;
            break;
        case fastss::Method::FastSS:
            out->method = FSS_METHOD_FASTSS;
            break;
        }
        out->split_threshold = row.m.value_or(FSS_NO_SPLIT);
        out->stored_pairs = row.stored_pairs;
        out->distinct_keys = row.distinct_keys;
        out->build_ms = row.build_ms;
        out->mean_query_us = row.mean_query_us;
        out->median_query_us = row.median_query_us;
        out->mean_cand = row.mean_cand;
        out->mean_matches = row.mean_matches;
        out->seed = row.seed;
    });
}

fss_status fss_report_write_csv(const fss_report* report, const char* path) {
    return guarded([&] {
        require(report != nullptr && path != nullptr, "null argument");
        std::ofstream out(path, std::ios::trunc);
        if (!out) {
            throw fastss::InputError(std::string("cannot open '") + path + "' for writing", 0);
        }
        fastss::write_csv(out, report->rows);
        if (!out) {
            throw fastss::InputError(std::string("write to '") + path + "' failed", 0);
        }
    });
}

void fss_report_free(fss_report* report) {
    delete report;
}

fss_status fss_expected_candidates(uint64_t n, uint32_t length, uint32_t max_distance, uint32_t sigma, double* out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = fastss::expected_candidates({n, length, max_distance, sigma});
    });
}

fss_status fss_markov_bound(uint32_t length, uint32_t max_distance, uint32_t sigma, double c, double* out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = fastss::markov_bound({0, length, max_distance, sigma}, c);
    });
}

}
