/*
 * kwclass.h - C interface to the keyword-substitution equivalence library.
 *
 * Words and keywords cross the boundary as NUL-terminated strings over
 * {0,1}, first letter first. Unbounded integers travel as decimal strings.
 * Every function returns a kw_status; outputs are written through out
 * pointers and are only valid on KW_OK (except where noted). Strings
 * returned through char** are heap-allocated and released with
 * kw_string_free; arrays returned through uint64_t** are released with
 * kw_buffer_free. kw_last_error() describes the most recent failure on the
 * calling thread.
 */
#ifndef KWCLASS_H
#define KWCLASS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KW_API __declspec(dllexport)
#else
#define KW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kw_status {
  KW_OK = 0,
  KW_ERR_PARSE = 1,
  KW_ERR_INVALID_PARAMETER = 2,
  KW_ERR_INDEX_OUT_OF_RANGE = 3,
  KW_ERR_CAPACITY_EXCEEDED = 4,
  KW_ERR_LENGTH_MISMATCH = 5,
  KW_ERR_INVALID_DELTA = 6,
  KW_ERR_COMPONENT_TOO_LARGE = 7,
  KW_ERR_VERIFICATION_FAILED = 8,
  KW_ERR_NOMEM = 9,
  KW_ERR_INTERNAL = 10
} kw_status;

KW_API const char* kw_status_name(kw_status status);
KW_API const char* kw_last_error(void);
KW_API void kw_string_free(char* s);
KW_API void kw_buffer_free(void* p);

KW_API const char* kw_version(void);
/* Word-length caps; KWCLASS_MAX_N in the environment adjusts the first. */
KW_API int kw_max_n(void);
KW_API int kw_max_n_graph(void);

/* ---------------------------------------------------------------- words */

KW_API kw_status kw_negate(const char* u, char** out);
KW_API kw_status kw_reverse(const char* u, char** out);
/* Flips the letters at even positions 2, 4, ... */
KW_API kw_status kw_seminegate(const char* u, char** out);
KW_API kw_status kw_concat(const char* u, const char* w, char** out);
/* Letters i..j of u, 1-based inclusive. */
KW_API kw_status kw_subword(const char* u, int i, int j, char** out);

/* *out = 1 iff the keyword or its negation starts at letter i of u. */
KW_API kw_status kw_applicable(const char* keyword, const char* u, int i,
                               int* out);
/* Negates the window at i when applicable, else returns u unchanged. */
KW_API kw_status kw_simple_map(const char* keyword, int i, const char* u,
                               char** out);
/* *out = 1 iff each map in indices, applied first-to-last, changes the word. */
KW_API kw_status kw_acts_completely(const char* keyword, const int* indices,
                                    size_t index_count, const char* u,
                                    int* out);
/* Commutativity of simple maps with index gap delta >= 1, from the keyword
 * alone. */
KW_API kw_status kw_commutes_by_criterion(const char* keyword, int delta,
                                          int* out);
/* Exhaustive commutativity check over {0,1}^n; needs 1 <= i < j <= n-m. */
KW_API kw_status kw_commutes_brute_force(const char* keyword, int i, int j,
                                         int n, int* out);
/* Closure of the keyword under negation/reversal/seminegation;
 * space-separated, increasing bitmask order. */
KW_API kw_status kw_keyword_orbit(const char* keyword, char** out);

/* ------------------------------------------------------------ sequences */

/* m-step sequence: F_0 = 1, F_n = 2^{n-1} for n < m, then each term sums
 * the previous m terms. */
KW_API kw_status kw_fib(int m, int n, char** out);
KW_API kw_status kw_partial_sum(int m, int n, char** out);
/* Sum of F_i over the positions i where u has letter 1. */
KW_API kw_status kw_word_value(int m, const char* u, char** out);
/* Unique nonconsecutive representation (m = 2), "(index,value)" pairs in
 * increasing index order, "" for zero. */
KW_API kw_status kw_zeckendorf(const char* value_decimal, char** out);
/* Number of subsets of {F_1..F_max_index} summing to the value. */
KW_API kw_status kw_count_representations(int m, const char* value_decimal,
                                          int max_index, char** out);
/* Max representation count over values in [F_n, F_{n+1}); m >= 2. */
KW_API kw_status kw_max_representations(int m, int n, char** out);

/* -------------------------------------------------------------- classes */

typedef struct kw_partition kw_partition;

/* Builds the partition of {0,1}^n. workers <= 1 runs sequentially; results
 * are identical for any worker count. */
KW_API kw_status kw_partition_build(const char* keyword, int n, int workers,
                                    kw_partition** out);
KW_API void kw_partition_free(kw_partition* partition);
KW_API kw_status kw_partition_class_count(const kw_partition* partition,
                                          uint64_t* out);
KW_API kw_status kw_partition_class_size(const kw_partition* partition,
                                         const char* u, uint64_t* out);
KW_API kw_status kw_partition_same_class(const kw_partition* partition,
                                         const char* u, const char* v,
                                         int* out);
/* Minimum-bitmask member of the class of u. */
KW_API kw_status kw_partition_representative(const kw_partition* partition,
                                             const char* u, char** out);
/* Parallel arrays (class size, number of classes of that size), ascending
 * size. Both freed with kw_buffer_free. */
KW_API kw_status kw_partition_histogram(const kw_partition* partition,
                                        uint64_t** sizes, uint64_t** counts,
                                        size_t* length);
KW_API kw_status kw_partition_histogram_csv(const kw_partition* partition,
                                            char** out);
KW_API kw_status kw_partition_histogram_json(const kw_partition* partition,
                                             char** out);

/* One-shot class count (builds and discards the partition). */
KW_API kw_status kw_count_classes(const char* keyword, int n, int workers,
                                  uint64_t* out);
/* Members of the class of u, space-separated, increasing bitmask order. */
KW_API kw_status kw_class_of(const char* keyword, const char* u, char** out);
/* Class counts versus partial sums for every n <= n_max. Fills the report
 * and ok flag in both the KW_OK and KW_ERR_VERIFICATION_FAILED cases. */
KW_API kw_status kw_verify_theorem(const char* keyword, int n_max, int workers,
                                   char** report, int* ok);

/* -------------------------------------------------------------- spectra */

/* Overlap flags as a 0/1 string, overlap length i at position i-1. */
KW_API kw_status kw_fingerprint(const char* keyword, char** out);
/* Printable correlation polynomials; any output pointer may be NULL. */
KW_API kw_status kw_correlation_polynomials(const char* keyword, char** p1,
                                            char** p2, char** q);
/* *out = 1 iff the keywords induce the same number of singleton classes at
 * every length (equal fingerprints). */
KW_API kw_status kw_same_size1_counts(const char* keyword_a,
                                      const char* keyword_b, int* out);
/* Counts of words avoiding both the keyword and its negation, for lengths
 * 0..n_max. method is "gf", "brute" or "transfer". Space-separated. */
KW_API kw_status kw_series(const char* keyword, int n_max, const char* method,
                           char** out);
KW_API kw_status kw_series_csv(const char* keyword, int n_max,
                               const char* method, char** out);
KW_API kw_status kw_series_json(const char* keyword, int n_max,
                                const char* method, char** out);

/* --------------------------------------------------------------- graphs */

/* Substitution-graph distance; -1 when the words are not equivalent. */
KW_API kw_status kw_distance(const char* keyword, const char* u, const char* v,
                             int64_t* out);
KW_API kw_status kw_is_bipartite(const char* keyword, int n, int* out);
/* Graph isomorphism at length n. component_cap <= 0 selects the default
 * cap (64) for the canonical-labeling fallback. */
KW_API kw_status kw_isomorphic(const char* keyword_a, const char* keyword_b,
                               int n, int component_cap, int* out);
/* "certificate-hex count" lines, ascending certificate. */
KW_API kw_status kw_canonical_histogram(const char* keyword, int n,
                                        int component_cap, char** out);
/* DOT rendering of the component containing u. */
KW_API kw_status kw_component_dot(const char* keyword, const char* u,
                                  char** out);

/* --------------------------------------------------------------- verify */

/* suite: "theorem", "gf", "commute", "bipartite", "iso" or "all".
 * cross_pair_max_n (iso/all only) bounds the 10000/01000 comparison; <= 0
 * skips it. Fills report and ok in both the KW_OK and
 * KW_ERR_VERIFICATION_FAILED cases. */
KW_API kw_status kw_verify_suite(const char* suite, int max_m, int max_n,
                                 int cross_pair_max_n, int workers,
                                 int dedupe_orbit, char** report, int* ok);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KWCLASS_H */
