#include "balanceclat.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "balanceclat/datagen.hpp"
#include "balanceclat/histogram.hpp"
#include "balanceclat/ingest.hpp"
#include "balanceclat/miner.hpp"
#include "balanceclat/stability.hpp"
#include "balanceclat/transactions.hpp"

struct bclat_database {
  bclat::TransactionDatabase db;
};

struct bclat_results {
  bclat_result_kind kind = BCLAT_RESULT_BALANCED;
  std::vector<bclat::BalancedPatternResult> balanced;
  std::vector<bclat::StablePatternResult> stable;

  size_t count() const {
    return kind == BCLAT_RESULT_BALANCED ? balanced.size() : stable.size();
  }
};

namespace {

thread_local std::string g_last_error;

bclat_status fail(bclat_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `fn` and maps thrown errors onto status codes.
template <typename Fn>
bclat_status guarded(Fn&& fn) {
  try {
    fn();
    return BCLAT_OK;
  } catch (const bclat::ParseError& e) {
    return fail(BCLAT_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BCLAT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(BCLAT_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BCLAT_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(BCLAT_ERR_INTERNAL, e.what());
  }
}

bclat_status require(bool ok, const char* message) {
  return ok ? BCLAT_OK : fail(BCLAT_ERR_INVALID_ARGUMENT, message);
}

const bclat::BalancedPatternResult* balanced_row(const bclat_results* r, size_t row) {
  if (r == nullptr || r->kind != BCLAT_RESULT_BALANCED || row >= r->balanced.size()) {
    return nullptr;
  }
  return &r->balanced[row];
}

const bclat::StablePatternResult* stable_row(const bclat_results* r, size_t row) {
  if (r == nullptr || r->kind != BCLAT_RESULT_STABLE || row >= r->stable.size()) {
    return nullptr;
  }
  return &r->stable[row];
}

const bclat::Itemset* row_items(const bclat_results* r, size_t row) {
  if (const auto* b = balanced_row(r, row)) return &b->items;
  if (const auto* s = stable_row(r, row)) return &s->items;
  return nullptr;
}

}  // namespace

extern "C" {

const char* bclat_version(void) { return "1.0.0"; }

const char* bclat_last_error(void) { return g_last_error.c_str(); }

const char* bclat_status_name(bclat_status status) {
  switch (status) {
    case BCLAT_OK: return "BCLAT_OK";
    case BCLAT_ERR_INVALID_ARGUMENT: return "BCLAT_ERR_INVALID_ARGUMENT";
    case BCLAT_ERR_PARSE: return "BCLAT_ERR_PARSE";
    case BCLAT_ERR_IO: return "BCLAT_ERR_IO";
    case BCLAT_ERR_NOMEM: return "BCLAT_ERR_NOMEM";
    case BCLAT_ERR_INTERNAL: return "BCLAT_ERR_INTERNAL";
  }
  return "BCLAT_ERR_UNKNOWN";
}

bclat_status bclat_db_load(const char* path, bclat_database** out_db) {
  if (auto s = require(path && out_db, "bclat_db_load: null argument")) return s;
  return guarded([&] {
    auto db = std::make_unique<bclat_database>();
    db->db = bclat::load_database_file(path);
    *out_db = db.release();
  });
}

bclat_status bclat_db_parse(const char* text, bclat_database** out_db) {
  if (auto s = require(text && out_db, "bclat_db_parse: null argument")) return s;
  return guarded([&] {
    std::istringstream in{std::string(text)};
    auto db = std::make_unique<bclat_database>();
    db->db = bclat::read_database(in);
    *out_db = db.release();
  });
}

bclat_status bclat_db_save(const bclat_database* db, const char* path) {
  if (auto s = require(db && path, "bclat_db_save: null argument")) return s;
  return guarded([&] { bclat::save_database_file(db->db, path); });
}

bclat_status bclat_db_generate(const bclat_generator_config* config,
                               bclat_database** out_db) {
  if (auto s = require(config && out_db, "bclat_db_generate: null argument")) return s;
  return guarded([&] {
    bclat::GeneratorConfig cfg;
    cfg.n_transactions = config->n_transactions;
    cfg.n_items = config->n_items;
    cfg.pattern_size = config->pattern_size;
    cfg.period = config->period;
    cfg.noise_percent = config->noise_percent;
    cfg.background_density = config->background_density;
    cfg.seed = config->seed;
    auto db = std::make_unique<bclat_database>();
    db->db = bclat::generate(cfg);
    *out_db = db.release();
  });
}

bclat_status bclat_db_generate_random(uint32_t n_transactions, uint32_t n_items,
                                      double density, uint64_t seed,
                                      bclat_database** out_db) {
  if (auto s = require(out_db != nullptr, "bclat_db_generate_random: null argument")) return s;
  return guarded([&] {
    auto db = std::make_unique<bclat_database>();
    db->db = bclat::generate_random(n_transactions, n_items, density, seed);
    *out_db = db.release();
  });
}

bclat_status bclat_db_bucket(const bclat_event* events, size_t n_events,
                             int64_t window_seconds, const int64_t* start_or_null,
                             bclat_database** out_db) {
  if (auto s = require(out_db && (events || n_events == 0), "bclat_db_bucket: null argument")) {
    return s;
  }
  return guarded([&] {
    std::vector<bclat::Event> evs(n_events);
    for (size_t i = 0; i < n_events; ++i) {
      evs[i].timestamp = events[i].timestamp;
      evs[i].item = events[i].item;
    }
    bclat::BucketConfig cfg;
    cfg.window_seconds = window_seconds;
    if (start_or_null != nullptr) cfg.start = *start_or_null;
    auto db = std::make_unique<bclat_database>();
    db->db = bclat::bucket(evs, cfg);
    *out_db = db.release();
  });
}

size_t bclat_db_transaction_count(const bclat_database* db) {
  return db == nullptr ? 0 : db->db.size();
}

size_t bclat_db_transaction_items(const bclat_database* db, size_t position,
                                  uint32_t* out_items, size_t capacity) {
  if (db == nullptr || position >= db->db.size()) return 0;
  const auto& items = db->db[position].items();
  if (out_items != nullptr) {
    size_t n = std::min(items.size(), capacity);
    std::memcpy(out_items, items.data(), n * sizeof(uint32_t));
  }
  return items.size();
}

void bclat_db_free(bclat_database* db) { delete db; }

bclat_status bclat_mine_balanced(const bclat_database* db,
                                 const bclat_mining_params* params,
                                 bclat_results** out_results) {
  if (auto s = require(db && params && out_results, "bclat_mine_balanced: null argument")) {
    return s;
  }
  return guarded([&] {
    bclat::MiningParams p;
    p.minnumber = params->minnumber;
    p.maxstdev = params->maxstdev;
    p.minavg = params->minavg;
    p.ell = params->max_distance;
    p.mindistfreq = params->mindistfreq;
    p.max_pattern_size = params->max_pattern_size;
    unsigned threads = params->threads == 0 ? 1 : params->threads;
    auto results = std::make_unique<bclat_results>();
    results->kind = BCLAT_RESULT_BALANCED;
    results->balanced = bclat::mine_balanced(db->db, p, threads);
    *out_results = results.release();
  });
}

bclat_status bclat_mine_stable(const bclat_database* db,
                               const bclat_stability_params* params,
                               bclat_results** out_results) {
  if (auto s = require(db && params && out_results, "bclat_mine_stable: null argument")) {
    return s;
  }
  return guarded([&] {
    bclat::StabilityParams p;
    p.w = params->w;
    p.minstable = params->minstable;
    p.minsup = params->minsup;
    unsigned threads = params->threads == 0 ? 1 : params->threads;
    auto results = std::make_unique<bclat_results>();
    results->kind = BCLAT_RESULT_STABLE;
    results->stable = bclat::mine_stable(db->db, p, threads);
    *out_results = results.release();
  });
}

bclat_result_kind bclat_results_kind(const bclat_results* results) {
  return results == nullptr ? BCLAT_RESULT_BALANCED : results->kind;
}

size_t bclat_results_count(const bclat_results* results) {
  return results == nullptr ? 0 : results->count();
}

size_t bclat_results_items(const bclat_results* results, size_t row,
                           uint32_t* out_items, size_t capacity) {
  const bclat::Itemset* items = row_items(results, row);
  if (items == nullptr) return 0;
  if (out_items != nullptr) {
    size_t n = std::min(items->size(), capacity);
    std::memcpy(out_items, items->data(), n * sizeof(uint32_t));
  }
  return items->size();
}

uint64_t bclat_results_support(const bclat_results* results, size_t row) {
  if (const auto* b = balanced_row(results, row)) return b->stats.support;
  if (const auto* s = stable_row(results, row)) return s->support;
  return 0;
}

uint64_t bclat_results_score(const bclat_results* results, size_t row) {
  if (const auto* b = balanced_row(results, row)) return b->stats.balance_value;
  if (const auto* s = stable_row(results, row)) return s->score.value();
  return 0;
}

double bclat_results_avgdist(const bclat_results* results, size_t row) {
  const auto* b = balanced_row(results, row);
  return b == nullptr ? 0.0 : b->stats.avgdist;
}

double bclat_results_stdev(const bclat_results* results, size_t row) {
  const auto* b = balanced_row(results, row);
  return b == nullptr ? 0.0 : b->stats.stdev;
}

size_t bclat_results_succ_bins(const bclat_results* results, size_t row,
                               uint32_t* out_distances, uint64_t* out_counts,
                               size_t capacity) {
  const auto* b = balanced_row(results, row);
  if (b == nullptr) return 0;
  size_t i = 0;
  for (const auto& [dist, count] : b->succ_histogram.counts) {
    if (i < capacity) {
      if (out_distances != nullptr) out_distances[i] = dist;
      if (out_counts != nullptr) out_counts[i] = count;
    }
    ++i;
  }
  return b->succ_histogram.counts.size();
}

uint64_t bclat_results_stable_triples(const bclat_results* results, size_t row) {
  const auto* s = stable_row(results, row);
  return s == nullptr ? 0 : s->score.triples;
}

uint64_t bclat_results_stable_left(const bclat_results* results, size_t row) {
  const auto* s = stable_row(results, row);
  return s == nullptr ? 0 : s->score.left_endpoints;
}

uint64_t bclat_results_stable_right(const bclat_results* results, size_t row) {
  const auto* s = stable_row(results, row);
  return s == nullptr ? 0 : s->score.right_endpoints;
}

void bclat_results_free(bclat_results* results) { delete results; }

}  // extern "C"
