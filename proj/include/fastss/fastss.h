/* Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root. */
#ifndef FASTSS_FASTSS_H
#define FASTSS_FASTSS_H

/*
 * C interface to the fastss approximate dictionary matcher.
 *
 * All objects are opaque handles created by a *_create / *_load / *_build
 * call and released with the matching *_free. Functions that can fail return
 * an fss_status; on failure fss_last_error() describes the problem for the
 * calling thread until its next failing call. Strings are UTF-8 and
 * NUL-terminated.
 *
 * Index, dictionary and BK-tree handles are immutable after creation and may
 * be queried from several threads at once.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FSS_BUILDING_LIBRARY)
#    define FSS_API __declspec(dllexport)
#  else
#    define FSS_API __declspec(dllimport)
#  endif
#else
#  define FSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fss_status {
    FSS_OK = 0,
    FSS_ERR_USAGE = 1,       /* precondition violated, bad argument */
    FSS_ERR_INPUT = 2,       /* unreadable file or invalid UTF-8 word list */
    FSS_ERR_FORMAT = 3,      /* corrupt or incompatible index file */
    FSS_ERR_LOSSLESS = 4,    /* filtered results disagreed with the exhaustive scan */
    FSS_ERR_INTERNAL = 5
} fss_status;

/* Split threshold meaning "never split". */
#define FSS_NO_SPLIT 0xFFFFFFFFu

typedef struct fss_dictionary fss_dictionary;
typedef struct fss_index fss_index;
typedef struct fss_matches fss_matches;
typedef struct fss_bktree fss_bktree;
typedef struct fss_workload fss_workload;
typedef struct fss_report fss_report;

typedef struct fss_match {
    uint32_t word_id;
    uint32_t distance;
} fss_match;

typedef struct fss_index_info {
    uint32_t max_distance;
    uint32_t split_threshold; /* FSS_NO_SPLIT when unsplit */
    uint64_t word_count;
    uint64_t stored_pairs;
    uint64_t distinct_keys;
} fss_index_info;

typedef enum fss_method {
    FSS_METHOD_NAIVE = 0,
    FSS_METHOD_BKTREE = 1,
    FSS_METHOD_FASTSS = 2
} fss_method;

typedef struct fss_report_row {
    const char* dataset;      /* owned by the report */
    uint64_t n;
    uint32_t d;
    fss_method method;
    uint32_t split_threshold; /* FSS_NO_SPLIT for unsplit FastSS and for baselines */
    uint64_t stored_pairs;
    uint64_t distinct_keys;
    double build_ms;
    double mean_query_us;
    double median_query_us;
    double mean_cand;
    double mean_matches;
    uint64_t seed;
} fss_report_row;

FSS_API const char* fss_last_error(void);
FSS_API const char* fss_status_name(fss_status status);

/* Edit distance. fss_banded_distance sets *within to 0 and leaves *distance
 * untouched when the distance exceeds bound. */
FSS_API fss_status fss_edit_distance(const char* a, const char* b, uint32_t* distance);
FSS_API fss_status fss_banded_distance(const char* a, const char* b, uint32_t bound, int* within,
                                       uint32_t* distance);

/* FNV-1a 64 key of a residual; tag is 0 (whole), 1 (prefix) or 2 (suffix). */
FSS_API fss_status fss_residual_key(uint8_t tag, const char* residual, uint64_t* key);

/* Dictionaries. fss_dictionary_create rejects duplicate or empty words;
 * fss_dictionary_load drops duplicates and blank lines. */
FSS_API fss_status fss_dictionary_create(const char* const* words, size_t count, fss_dictionary** out);
FSS_API fss_status fss_dictionary_load(const char* path, fss_dictionary** out);
FSS_API void fss_dictionary_free(fss_dictionary* dict);
FSS_API size_t fss_dictionary_size(const fss_dictionary* dict);
/* NULL when id is out of range. Valid while dict lives. */
FSS_API const char* fss_dictionary_word(const fss_dictionary* dict, uint32_t id);
FSS_API double fss_dictionary_average_length(const fss_dictionary* dict);

/* Index. split_threshold = FSS_NO_SPLIT disables splitting. */
FSS_API fss_status fss_index_build(const fss_dictionary* dict, uint32_t max_distance, uint32_t split_threshold,
                                   fss_index** out);
FSS_API fss_status fss_index_save(const fss_index* index, const char* path);
FSS_API fss_status fss_index_load(const char* path, fss_index** out);
/* Serialized bytes; *out must be released with fss_bytes_free. */
FSS_API fss_status fss_index_serialize(const fss_index* index, uint8_t** out, size_t* size);
FSS_API fss_status fss_index_deserialize(const uint8_t* bytes, size_t size, fss_index** out);
FSS_API void fss_bytes_free(uint8_t* bytes);
FSS_API void fss_index_free(fss_index* index);
FSS_API fss_status fss_index_info_get(const fss_index* index, fss_index_info* out);
/* The dictionary embedded in the index. Borrowed; valid while index lives. */
FSS_API const fss_dictionary* fss_index_dictionary(const fss_index* index);
/* 1 when both handles hold identical parameters, words and tables. */
FSS_API int fss_index_equal(const fss_index* a, const fss_index* b);

/* Queries. candidates may be NULL. */
FSS_API fss_status fss_index_query(const fss_index* index, const char* word, fss_matches** out, size_t* candidates);
FSS_API fss_status fss_naive_scan(const fss_dictionary* dict, const char* word, uint32_t max_distance,
                                  fss_matches** out);
FSS_API size_t fss_matches_size(const fss_matches* matches);
/* Returns FSS_ERR_USAGE when i is out of range. */
FSS_API fss_status fss_matches_get(const fss_matches* matches, size_t i, fss_match* out);
FSS_API void fss_matches_free(fss_matches* matches);

/* BK-tree baseline. The tree borrows dict, which must outlive it. */
FSS_API fss_status fss_bktree_build(const fss_dictionary* dict, fss_bktree** out);
FSS_API fss_status fss_bktree_query(const fss_bktree* tree, const char* word, uint32_t max_distance,
                                    fss_matches** out, uint64_t* distance_computations);
FSS_API void fss_bktree_free(fss_bktree* tree);

/* Perturbed query workloads. */
FSS_API fss_status fss_workload_perturb(const fss_dictionary* dict, size_t count, uint32_t max_errors, uint64_t seed,
                                        fss_workload** out);
FSS_API size_t fss_workload_size(const fss_workload* workload);
/* Query text is valid while workload lives. */
FSS_API fss_status fss_workload_get(const fss_workload* workload, size_t i, const char** word, uint32_t* source,
                                    uint32_t* errors);
FSS_API void fss_workload_free(fss_workload* workload);

/* Benchmarks. Every query is cross-checked against the naive scan and
 * FSS_ERR_LOSSLESS is returned on any disagreement. */
FSS_API fss_status fss_bench_run(const fss_dictionary* dict, const char* dataset, uint32_t max_distance,
                                 uint32_t split_threshold, const fss_workload* workload, fss_report** out);
FSS_API fss_status fss_compare_run(const fss_dictionary* dict, const char* dataset, uint32_t max_distance,
                                   const fss_workload* workload, fss_report** out);
FSS_API size_t fss_report_size(const fss_report* report);
FSS_API fss_status fss_report_get(const fss_report* report, size_t i, fss_report_row* out);
FSS_API fss_status fss_report_write_csv(const fss_report* report, const char* path);
FSS_API void fss_report_free(fss_report* report);

/* Average-case collision model. */
FSS_API fss_status fss_expected_candidates(uint64_t n, uint32_t length, uint32_t max_distance, uint32_t sigma,
                                           double* out);
FSS_API fss_status fss_markov_bound(uint32_t length, uint32_t max_distance, uint32_t sigma, double c, double* out);

#ifdef __cplusplus
}
#endif

#endif
