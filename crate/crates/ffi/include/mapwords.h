#ifndef MAPWORDS_H
#define MAPWORDS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Property bits reported by `mw_word_properties`.
#define MW_PROPERTY_P 1

#define MW_PROPERTY_Q 2

#define MW_PROPERTY_N 4

#define MW_PROPERTY_NPRIME 8

// Result code of every call.
typedef enum MwStatus {
  MW_STATUS_OK = 0,
  MW_STATUS_NULL_POINTER = 1,
  MW_STATUS_INVALID_UTF8 = 2,
  MW_STATUS_PARSE = 3,
  MW_STATUS_DOMAIN = 4,
  MW_STATUS_GUARD = 5,
  MW_STATUS_PANIC = 6,
} MwStatus;

// A general map with an optional root flag.
typedef struct MwMap MwMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a map from JSON text. On success `*out` receives a new handle.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum MwStatus mw_map_from_json(const char *json, struct MwMap **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `map` must come from this library and not be used afterwards.
void mw_map_free(struct MwMap *map);

// Writes the map as JSON text into a new string.
//
// # Safety
// `map` must be a live handle; `out` must be writable.
enum MwStatus mw_map_to_json(const struct MwMap *map, char **out);

// The dual map, rooted at the same flag.
//
// # Safety
// `map` must be a live handle; `out` must be writable.
enum MwStatus mw_map_dual(const struct MwMap *map, struct MwMap **out);

// The genus of a connected map.
//
// # Safety
// `map` must be a live handle; `out` must be writable.
enum MwStatus mw_map_genus(const struct MwMap *map, size_t *out);

// The number of quasi-trees, as a decimal string.
//
// # Safety
// `map` must be a live handle; `out` must be writable.
enum MwStatus mw_map_count_quasi_trees(const struct MwMap *map, char **out);

// Whether the `len` edge ids at `edges` form a quasi-tree.
//
// # Safety
// `map` must be a live handle; `edges` must point to `len` values (it may be
// null when `len` is 0); `out` must be writable.
enum MwStatus mw_map_is_quasi_tree(const struct MwMap *map,
                                   const size_t *edges,
                                   size_t len,
                                   bool *out);

// Deletes `edge`. Fails on bridges.
//
// # Safety
// `map` must be a live handle; `out` must be writable.
enum MwStatus mw_map_delete_edge(const struct MwMap *map, size_t edge, struct MwMap **out);

// Contracts `edge`. Fails on separating loops.
//
// # Safety
// `map` must be a live handle; `out` must be writable.
enum MwStatus mw_map_contract_edge(const struct MwMap *map, size_t edge, struct MwMap **out);

// Words with `n` matched and `m` unmatched symbols having property Q, as a
// decimal string. With `m = 0` this counts rooted loopless maps.
//
// # Safety
// `out` must be writable.
enum MwStatus mw_count_loopless(size_t n, size_t m, char **out);

// Bitmask of the word properties that hold, from the `MW_PROPERTY_*` bits.
// P and N are reported only for double occurrence words.
//
// # Safety
// `word` must be a nul-terminated string; `out` must be writable.
enum MwStatus mw_word_properties(const char *word, uint32_t *out);

// Message of the last failed call on this thread, or null after a
// successful call. The pointer stays valid until the next call.
const char *mw_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void mw_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAPWORDS_H */
