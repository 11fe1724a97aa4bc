#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "balanceclat/transactions.hpp"

namespace bclat {

/// Counts of inter-occurrence distances over every occurrence pair,
/// capped at a maximal distance ell. counts[d] is the number of pairs
/// at distance d, for d in {0, ..., ell}.
struct AllPairsHistogram {
  std::uint32_t ell = 0;
  std::vector<std::uint64_t> counts;  // size ell + 1

  explicit AllPairsHistogram(std::uint32_t ell_ = 0)
      : ell(ell_), counts(std::size_t{ell_} + 1, 0) {}
};

/// Counts of distances between consecutive occurrences only, uncapped.
/// Holds exactly support - 1 observations in total (0 for support < 2).
struct SuccessiveHistogram {
  std::map<std::uint32_t, std::uint64_t> counts;  // distance -> count, counts > 0

  std::uint64_t total() const;
};

/// Weighted average and population standard deviation of a distance
/// histogram.
struct DistanceStats {
  double avgdist = 0.0;
  double stdev = 0.0;
};

/// Per-pattern summary carried in mining results.
struct PatternStats {
  std::uint64_t balance_value = 0;  // largest all-pairs count, 0 if support < 2
  double avgdist = 0.0;
  double stdev = 0.0;
  std::uint64_t support = 0;
};

struct HistogramPair {
  AllPairsHistogram all_pairs;
  SuccessiveHistogram successive;
};

/// Accumulates both histograms for one pattern's tidset: all ordered
/// occurrence pairs within distance ell, and consecutive pairs uncapped.
HistogramPair build_histograms(const Tidset& tids, std::uint32_t ell);

/// Largest count in the histogram; 0 when all counts are zero.
std::uint64_t balance_value(const AllPairsHistogram& h);

/// Weighted mean and population standard deviation over all bins.
/// Empty histogram -> nullopt (no distances exist; the caller encodes
/// the pattern as not balanced).
std::optional<DistanceStats> stats_plain(const SuccessiveHistogram& s);

/// Statistics over the frequent bins only: bins whose count is at least
/// mindistfreq. When no bin qualifies the result is the sentinel
/// {avgdist = 0, stdev = maxstdev + 1}, which fails both display filters.
DistanceStats stats_restricted(const SuccessiveHistogram& s,
                               std::uint64_t mindistfreq, double maxstdev);

}  // namespace bclat
