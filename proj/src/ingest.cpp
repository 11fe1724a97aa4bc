#include "balanceclat/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <string>

namespace bclat {

TransactionDatabase bucket(std::span<const Event> events, const BucketConfig& config) {
  if (config.window_seconds < 1) {
    throw std::invalid_argument("window_seconds must be >= 1");
  }
  if (events.empty()) return TransactionDatabase{};

  std::int64_t min_ts = events[0].timestamp;
  std::int64_t max_ts = events[0].timestamp;
  for (const Event& e : events) {
    min_ts = std::min(min_ts, e.timestamp);
    max_ts = std::max(max_ts, e.timestamp);
  }

  const std::int64_t w = config.window_seconds;
  const std::int64_t start = config.start ? *config.start : (min_ts / w) * w;
  if (min_ts < start) {
    for (const Event& e : events) {
      if (e.timestamp < start) {
        throw std::invalid_argument(
            "event (timestamp=" + std::to_string(e.timestamp) +
            ", item=" + std::to_string(e.item) + ") precedes bucket start " +
            std::to_string(start));
      }
    }
  }

  const std::size_t n_windows = static_cast<std::size_t>((max_ts - start) / w) + 1;
  std::vector<std::vector<Item>> windows(n_windows);
  for (const Event& e : events) {
    windows[static_cast<std::size_t>((e.timestamp - start) / w)].push_back(e.item);
  }

  std::vector<Transaction> transactions;
  transactions.reserve(n_windows);
  for (auto& window : windows) transactions.emplace_back(std::move(window));
  return TransactionDatabase(std::move(transactions));
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t begin = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > begin) tokens.push_back(line.substr(begin, i - begin));
  }
  return tokens;
}

template <typename T>
T parse_integer(std::string_view token, std::size_t line_no, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::vector<Event> read_events(std::istream& in) {
  std::vector<Event> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected '<timestamp> <item>', got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    Event e;
    e.timestamp = parse_integer<std::int64_t>(tokens[0], line_no, "timestamp");
    if (e.timestamp < 0) {
      throw ParseError(line_no, "negative timestamp '" + std::string(tokens[0]) + "'");
    }
    std::uint64_t item = parse_integer<std::uint64_t>(tokens[1], line_no, "item id");
    if (item > std::numeric_limits<Item>::max()) {
      throw ParseError(line_no, "item id out of range: " + std::string(tokens[1]));
    }
    e.item = static_cast<Item>(item);
    events.push_back(e);
  }
  return events;
}

std::vector<Event> load_events_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open events file: " + path);
  }
  return read_events(in);
}

}  // namespace bclat
