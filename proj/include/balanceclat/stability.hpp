#pragma once

#include <cstdint>

#include "balanceclat/transactions.hpp"

namespace bclat {

/// Thresholds for the stable-pattern baseline.
struct StabilityParams {
  std::uint32_t w = 0;          // triple slack: |distance(L,M) - distance(M,R)| <= 2w
  std::uint64_t minstable = 1;  // minimal stability value
  std::uint64_t minsup = 1;     // minimal support
};

/// Breakdown of a pattern's stability value.
struct StabilityScore {
  std::uint64_t triples = 0;          // number of w-good triples
  std::uint64_t left_endpoints = 0;   // distinct transactions acting as L
  std::uint64_t right_endpoints = 0;  // distinct transactions acting as R

  std::uint64_t value() const { return triples + left_endpoints + right_endpoints; }

  friend bool operator==(const StabilityScore&, const StabilityScore&) = default;
};

struct StablePatternResult {
  Itemset items;
  StabilityScore score;
  std::uint64_t support = 0;
};

/// Counts the w-good triples (L,M,R) of occurrences: three positions in
/// order with |distance(L,M) - distance(M,R)| <= 2w, plus the distinct
/// left and right endpoints. For w = 0 this runs an O(m^2) midpoint
/// search; otherwise the naive triple scan.
StabilityScore stability_value(const Tidset& tids, std::uint32_t w);

/// Plain O(m^3) triple scan. Agrees with stability_value on every input;
/// kept as the reference path.
StabilityScore stability_value_naive(const Tidset& tids, std::uint32_t w);

/// Depth-first search emitting itemsets with support >= minsup and
/// stability value >= minstable; both tests are anti-monotone and both
/// prune. Sorted by descending value, ties by ascending item sequence.
std::vector<StablePatternResult> mine_stable(const TransactionDatabase& db,
                                             const StabilityParams& params,
                                             unsigned threads = 1);

}  // namespace bclat
