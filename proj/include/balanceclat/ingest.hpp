#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "balanceclat/transactions.hpp"

namespace bclat {

/// One timestamped observation of an item.
struct Event {
  std::int64_t timestamp = 0;  // seconds since epoch, >= 0
  Item item = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Fixed-width time bucketing. Window k covers
/// [start + k*window_seconds, start + (k+1)*window_seconds).
struct BucketConfig {
  std::int64_t window_seconds = 1800;
  std::optional<std::int64_t> start;  // default: earliest event floored to a window boundary
};

/// Groups events into one transaction per window. Empty windows between
/// the first and last event are kept: distances are positional, so
/// dropping them would change every inter-occurrence distance.
/// The input order of events is irrelevant.
TransactionDatabase bucket(std::span<const Event> events, const BucketConfig& config);

/// Reads "<timestamp> <item>" lines; blank lines are skipped.
std::vector<Event> read_events(std::istream& in);

std::vector<Event> load_events_file(const std::string& path);

}  // namespace bclat
