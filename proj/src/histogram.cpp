#include "balanceclat/histogram.hpp"

#include <algorithm>
#include <cmath>

namespace bclat {

std::uint64_t SuccessiveHistogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [dist, count] : counts) sum += count;
  return sum;
}

HistogramPair build_histograms(const Tidset& tids, std::uint32_t ell) {
  HistogramPair out{AllPairsHistogram(ell), SuccessiveHistogram{}};
  const auto& pos = tids.positions;
  for (std::size_t j = 1; j < pos.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      std::uint32_t d = pos[j] - pos[i] - 1;
      if (d <= ell) {
        ++out.all_pairs.counts[d];
      }
    }
    ++out.successive.counts[pos[j] - pos[j - 1] - 1];
  }
  return out;
}

std::uint64_t balance_value(const AllPairsHistogram& h) {
  std::uint64_t best = 0;
  for (std::uint64_t c : h.counts) best = std::max(best, c);
  return best;
}

namespace {

// Weighted two-pass mean / population standard deviation over bins.
DistanceStats weighted_stats(const std::map<std::uint32_t, std::uint64_t>& bins) {
  double total = 0.0;
  double sum = 0.0;
  for (const auto& [dist, count] : bins) {
    total += static_cast<double>(count);
    sum += static_cast<double>(dist) * static_cast<double>(count);
  }
  double avg = sum / total;
  double sq = 0.0;
  for (const auto& [dist, count] : bins) {
    double delta = avg - static_cast<double>(dist);
    sq += delta * delta * static_cast<double>(count);
  }
  return DistanceStats{avg, std::sqrt(sq / total)};
}

}  // namespace

std::optional<DistanceStats> stats_plain(const SuccessiveHistogram& s) {
  if (s.counts.empty()) return std::nullopt;
  return weighted_stats(s.counts);
}

DistanceStats stats_restricted(const SuccessiveHistogram& s,
                               std::uint64_t mindistfreq, double maxstdev) {
  std::map<std::uint32_t, std::uint64_t> frequent;
  for (const auto& [dist, count] : s.counts) {
    if (count >= mindistfreq) frequent.emplace(dist, count);
  }
  if (frequent.empty()) {
    return DistanceStats{0.0, maxstdev + 1.0};
  }
  return weighted_stats(frequent);
}

}  // namespace bclat
