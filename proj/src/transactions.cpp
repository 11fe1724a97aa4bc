#include "balanceclat/transactions.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string_view>

namespace bclat {

Transaction::Transaction(std::vector<Item> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool Transaction::contains(Item item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Transaction::contains_all(std::span<const Item> pattern) const {
  for (Item item : pattern) {
    if (!contains(item)) return false;
  }
  return true;
}

TransactionDatabase::TransactionDatabase(std::vector<Transaction> transactions)
    : transactions_(std::move(transactions)) {}

TransactionDatabase TransactionDatabase::reversed() const {
  std::vector<Transaction> rev(transactions_.rbegin(), transactions_.rend());
  return TransactionDatabase(std::move(rev));
}

std::vector<Item> TransactionDatabase::item_universe() const {
  std::vector<Item> items;
  for (const Transaction& t : transactions_) {
    items.insert(items.end(), t.begin(), t.end());
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

std::uint32_t distance(Pos a, Pos b) {
  if (a >= b) {
    throw std::invalid_argument("distance requires a < b (got a=" +
                                std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
  return b - a - 1;
}

Tidset tidset_of(const TransactionDatabase& db, std::span<const Item> pattern) {
  Tidset tids;
  for (std::size_t pos = 0; pos < db.size(); ++pos) {
    if (db[pos].contains_all(pattern)) {
      tids.positions.push_back(static_cast<Pos>(pos));
    }
  }
  return tids;
}

Tidset intersect(const Tidset& a, const Tidset& b) {
  Tidset out;
  out.positions.reserve(std::min(a.positions.size(), b.positions.size()));
  std::set_intersection(a.positions.begin(), a.positions.end(),
                        b.positions.begin(), b.positions.end(),
                        std::back_inserter(out.positions));
  return out;
}

std::vector<std::pair<Item, Tidset>> item_tidsets(const TransactionDatabase& db) {
  std::map<Item, Tidset> by_item;
  for (std::size_t pos = 0; pos < db.size(); ++pos) {
    for (Item item : db[pos]) {
      by_item[item].positions.push_back(static_cast<Pos>(pos));
    }
  }
  std::vector<std::pair<Item, Tidset>> out;
  out.reserve(by_item.size());
  for (auto& [item, tids] : by_item) {
    out.emplace_back(item, std::move(tids));
  }
  return out;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

Item parse_item(std::string_view token, std::size_t line_no) {
  if (!token.empty() && token.front() == '-') {
    throw ParseError(line_no, "negative item id '" + std::string(token) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "invalid item token '" + std::string(token) + "'");
  }
  if (value > std::numeric_limits<Item>::max()) {
    throw ParseError(line_no, "item id out of range: " + std::string(token));
  }
  return static_cast<Item>(value);
}

}  // namespace

TransactionDatabase read_database(std::istream& in) {
  std::vector<Transaction> transactions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Item> items;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t begin = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (i > begin) {
        items.push_back(parse_item(std::string_view(line).substr(begin, i - begin), line_no));
      }
    }
    transactions.emplace_back(std::move(items));
  }
  return TransactionDatabase(std::move(transactions));
}

void write_database(const TransactionDatabase& db, std::ostream& out) {
  for (const Transaction& t : db) {
    bool first = true;
    for (Item item : t) {
      if (!first) out << ' ';
      out << item;
      first = false;
    }
    out << '\n';
  }
}

TransactionDatabase load_database_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open database file: " + path);
  }
  return read_database(in);
}

void save_database_file(const TransactionDatabase& db, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::ios_base::failure("cannot open output file: " + path);
  }
  write_database(db, out);
  out.flush();
  if (!out) {
    throw std::ios_base::failure("write failed: " + path);
  }
}

}  // namespace bclat
