#pragma once

#include <cstdint>

#include "balanceclat/histogram.hpp"
#include "balanceclat/transactions.hpp"

namespace bclat {

/// Thresholds for balanced-pattern mining. There is no minimum support:
/// pruning happens on the balance value alone.
struct MiningParams {
  std::uint64_t minnumber = 1;   // minimal count some all-pairs distance must reach
  double maxstdev = 0.0;         // maximal successive-distance standard deviation
  double minavg = 0.0;           // minimal successive-distance average
  std::uint32_t ell = 10;        // maximal tracked all-pairs distance
  std::uint64_t mindistfreq = 1; // bin count needed for a distance to be frequent; 1 = use all bins
  std::uint32_t max_pattern_size = 0;  // 0 = unlimited
};

struct BalancedPatternResult {
  Itemset items;
  PatternStats stats;
  SuccessiveHistogram succ_histogram;  // retained for reporting
};

/// Depth-first Eclat-style search over tidsets. A branch is cut exactly
/// when its balance value drops below minnumber (the per-distance counts
/// are anti-monotone); maxstdev and minavg are display filters applied to
/// the statistics over frequent successive distances. Results are sorted
/// by descending balance value, ties by ascending item sequence.
///
/// threads > 1 mines independent first-level branches concurrently; the
/// output is identical to the single-threaded run.
std::vector<BalancedPatternResult> mine_balanced(const TransactionDatabase& db,
                                                 const MiningParams& params,
                                                 unsigned threads = 1);

/// Ordering used for emitted patterns.
bool result_order(const BalancedPatternResult& a, const BalancedPatternResult& b);

}  // namespace bclat
