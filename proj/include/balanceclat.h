#ifndef BALANCECLAT_H
#define BALANCECLAT_H

/* C API of the balanceclat shared library.
 *
 * The library mines "balanced patterns" in ordered transaction databases:
 * itemsets that recur at (nearly) equidistant positions. It also carries
 * the older stability measure as a baseline, a planted-pattern generator
 * and a time-window bucketing ingester.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions that can fail return a bclat_status; on failure
 * bclat_last_error() gives a message for the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BCLAT_BUILD)
#define BCLAT_API __declspec(dllexport)
#else
#define BCLAT_API __declspec(dllimport)
#endif
#else
#define BCLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. */
typedef struct bclat_database bclat_database;
typedef struct bclat_results bclat_results;

typedef enum bclat_status {
  BCLAT_OK = 0,
  BCLAT_ERR_INVALID_ARGUMENT = 1,
  BCLAT_ERR_PARSE = 2,
  BCLAT_ERR_IO = 3,
  BCLAT_ERR_NOMEM = 4,
  BCLAT_ERR_INTERNAL = 5
} bclat_status;

typedef enum bclat_result_kind {
  BCLAT_RESULT_BALANCED = 0,
  BCLAT_RESULT_STABLE = 1
} bclat_result_kind;

/* Library version, "major.minor.patch". */
BCLAT_API const char* bclat_version(void);

/* Message for the last failing call on the calling thread. Valid until
 * the next failing call on the same thread. */
BCLAT_API const char* bclat_last_error(void);

/* Static name of a status code, e.g. "BCLAT_ERR_PARSE". */
BCLAT_API const char* bclat_status_name(bclat_status status);

/* ------------------------------------------------------------------ */
/* Databases                                                          */

/* Loads the line-per-transaction text format: whitespace-separated
 * non-negative item ids, one transaction per line, blank line = empty
 * transaction. */
BCLAT_API bclat_status bclat_db_load(const char* path, bclat_database** out_db);

/* Same format from a NUL-terminated string. */
BCLAT_API bclat_status bclat_db_parse(const char* text, bclat_database** out_db);

BCLAT_API bclat_status bclat_db_save(const bclat_database* db, const char* path);

typedef struct bclat_generator_config {
  uint32_t n_transactions;
  uint32_t n_items;
  uint32_t pattern_size;
  uint32_t period;
  double noise_percent;      /* [0, 100] */
  double background_density; /* [0, 1] */
  uint64_t seed;
} bclat_generator_config;

/* Synthetic database with a pattern of `pattern_size` items planted every
 * `period` transactions; deterministic in the config. */
BCLAT_API bclat_status bclat_db_generate(const bclat_generator_config* config,
                                         bclat_database** out_db);

/* Unstructured random database, items 1..n_items each present with the
 * given density. */
BCLAT_API bclat_status bclat_db_generate_random(uint32_t n_transactions,
                                                uint32_t n_items, double density,
                                                uint64_t seed,
                                                bclat_database** out_db);

typedef struct bclat_event {
  int64_t timestamp; /* seconds, >= 0 */
  uint32_t item;
} bclat_event;

/* Buckets timestamped events into one transaction per fixed-width window.
 * start_or_null: window origin; NULL floors the earliest event to a
 * window boundary. Empty windows between the first and last event are
 * kept as empty transactions. */
BCLAT_API bclat_status bclat_db_bucket(const bclat_event* events, size_t n_events,
                                       int64_t window_seconds,
                                       const int64_t* start_or_null,
                                       bclat_database** out_db);

BCLAT_API size_t bclat_db_transaction_count(const bclat_database* db);

/* Copies the items of one transaction into out_items (up to capacity)
 * and returns the transaction's item count. */
BCLAT_API size_t bclat_db_transaction_items(const bclat_database* db, size_t position,
                                            uint32_t* out_items, size_t capacity);

BCLAT_API void bclat_db_free(bclat_database* db);

/* ------------------------------------------------------------------ */
/* Mining                                                             */

typedef struct bclat_mining_params {
  uint64_t minnumber;    /* >= 1: count some all-pairs distance must reach */
  double maxstdev;       /* >= 0: max successive-distance standard deviation */
  double minavg;         /* >= 0: min successive-distance average */
  uint32_t max_distance; /* all-pairs distances tracked up to this value */
  uint64_t mindistfreq;  /* >= 1: bin count for a distance to be frequent */
  uint32_t max_pattern_size; /* 0 = unlimited */
  uint32_t threads;          /* 0 or 1 = single-threaded */
} bclat_mining_params;

BCLAT_API bclat_status bclat_mine_balanced(const bclat_database* db,
                                           const bclat_mining_params* params,
                                           bclat_results** out_results);

typedef struct bclat_stability_params {
  uint32_t w;
  uint64_t minstable;
  uint64_t minsup; /* >= 1 */
  uint32_t threads;
} bclat_stability_params;

BCLAT_API bclat_status bclat_mine_stable(const bclat_database* db,
                                         const bclat_stability_params* params,
                                         bclat_results** out_results);

/* ------------------------------------------------------------------ */
/* Results                                                            */
/*
 * Rows are sorted by descending score (balance value resp. stability
 * value), ties by ascending item sequence. Row accessors require
 * row < bclat_results_count(); out-of-range reads return 0.
 */

BCLAT_API bclat_result_kind bclat_results_kind(const bclat_results* results);

BCLAT_API size_t bclat_results_count(const bclat_results* results);

/* Copies the row's items (ascending) into out_items (up to capacity) and
 * returns the row's item count. */
BCLAT_API size_t bclat_results_items(const bclat_results* results, size_t row,
                                     uint32_t* out_items, size_t capacity);

BCLAT_API uint64_t bclat_results_support(const bclat_results* results, size_t row);

/* Balance value t for balanced rows, stability value for stable rows. */
BCLAT_API uint64_t bclat_results_score(const bclat_results* results, size_t row);

/* Balanced rows only; 0 for stable rows. */
BCLAT_API double bclat_results_avgdist(const bclat_results* results, size_t row);
BCLAT_API double bclat_results_stdev(const bclat_results* results, size_t row);

/* Successive-distance histogram of a balanced row: copies up to capacity
 * (distance, count) pairs in ascending distance order and returns the
 * number of bins. */
BCLAT_API size_t bclat_results_succ_bins(const bclat_results* results, size_t row,
                                         uint32_t* out_distances,
                                         uint64_t* out_counts, size_t capacity);

/* Stable rows only; 0 for balanced rows. */
BCLAT_API uint64_t bclat_results_stable_triples(const bclat_results* results, size_t row);
BCLAT_API uint64_t bclat_results_stable_left(const bclat_results* results, size_t row);
BCLAT_API uint64_t bclat_results_stable_right(const bclat_results* results, size_t row);

BCLAT_API void bclat_results_free(bclat_results* results);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BALANCECLAT_H */
