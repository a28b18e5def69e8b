/*
 * Public C interface to the k-type multiplicity engine.
 *
 * All functions are thread-compatible: distinct threads may use distinct
 * fs_pair handles freely. The error accessors return thread-local state
 * describing the most recent failure on the calling thread; the returned
 * pointers stay valid until the next fs_* call on that thread.
 *
 * Strings returned through char** out parameters are heap-allocated and must
 * be released with fs_string_free.
 *
 * Numeric inputs are exact rationals written as "p" or "p/q"; weights are
 * comma-separated lists of such rationals ("0", "-3/2,1"). Nothing is ever
 * parsed as floating point.
 */
#ifndef FSERIES_H
#define FSERIES_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FSERIES_API __declspec(dllexport)
#else
#define FSERIES_API __attribute__((visibility("default")))
#endif

/* Opaque validated pair (ambient root system, embedding of t, k root data). */
typedef struct fs_pair fs_pair;

/* Return codes shared by all report-producing calls:
 *   0  success; for table/verify this additionally means every verdict passed
 *   1  validation or verdict failure; *out holds the report when the pipeline
 *      ran (failed verdicts), and is NULL when loading/validation failed, in
 *      which case fs_last_error describes the problem
 *   2  misuse: NULL handle, NULL out pointer, or an unknown format name
 */

/* Loading. NULL on failure; see fs_last_error / fs_last_error_kind. */
FSERIES_API fs_pair* fs_pair_builtin(const char* name);
FSERIES_API fs_pair* fs_pair_load_file(const char* path);
FSERIES_API fs_pair* fs_pair_load_json(const char* json_text);
FSERIES_API void fs_pair_free(fs_pair* pair);

/* Newline-separated builtin pair names, in the shipped order. */
FSERIES_API char* fs_builtin_names(void);

/* Most recent failure on this thread: human message and stable machine kind
 * (e.g. "ConfigError", "NotDominant", "OmegaMismatch"). Empty strings when
 * the last call succeeded. */
FSERIES_API const char* fs_last_error(void);
FSERIES_API const char* fs_last_error_kind(void);

/* format is "text" or "json" in every call below. */

/* Pair summary: root data, restriction map, induced form, character split. */
FSERIES_API int fs_describe(const fs_pair* pair, const char* format, char** out);

/* Minimal parabolic attached to mu: the n/m split, s, rho values, Levi roots.
 * tiebreak is a comma-separated permutation of 0..dim(t*)-1, or NULL/"" for
 * the identity order. */
FSERIES_API int fs_parabolic(const fs_pair* pair, const char* mu, const char* tiebreak,
                             const char* format, char** out);

/* k-type table up to the norm cutoff, with the three structural verdicts.
 * kappa is a weight in h* coordinates or NULL/"auto" for the canonical lift;
 * cutoff is a rational or NULL/"auto" for 16*|mu+2rho|^2 + 16. */
FSERIES_API int fs_table(const fs_pair* pair, const char* mu, const char* kappa,
                         const char* cutoff, const char* tiebreak, const char* format,
                         char** out);

/* Full check battery (pair invariants, split, module, the three table
 * verdicts, character oracles, occurrence bound, byte-stability), one
 * PASS/FAIL line per check. Arguments as for fs_table. */
FSERIES_API int fs_verify(const fs_pair* pair, const char* mu, const char* kappa,
                          const char* cutoff, const char* tiebreak, const char* format,
                          char** out);

FSERIES_API void fs_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FSERIES_H */
