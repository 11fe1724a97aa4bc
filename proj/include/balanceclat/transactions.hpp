#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bclat {

/// Item identifier. Items are plain non-negative integers; any name/URL
/// mapping lives outside the core.
using Item = std::uint32_t;

/// Position of a transaction in the original database (0-based).
using Pos = std::uint32_t;

/// Sorted, duplicate-free sequence of items.
using Itemset = std::vector<Item>;

/// One itemset in the ordered database. May be empty (an empty time
/// window is a legal transaction).
class Transaction {
 public:
  Transaction() = default;
  explicit Transaction(std::vector<Item> items);

  bool contains(Item item) const;
  bool contains_all(std::span<const Item> pattern) const;

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const Transaction&, const Transaction&) = default;

 private:
  std::vector<Item> items_;  // ascending, unique
};

/// Ordered sequence of transactions; the position index is the temporal
/// order and defines all distances. Immutable after construction.
class TransactionDatabase {
 public:
  TransactionDatabase() = default;
  explicit TransactionDatabase(std::vector<Transaction> transactions);

  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }
  const Transaction& operator[](std::size_t pos) const { return transactions_[pos]; }

  auto begin() const { return transactions_.begin(); }
  auto end() const { return transactions_.end(); }

  /// Same transactions in reverse temporal order.
  TransactionDatabase reversed() const;

  /// All distinct items occurring anywhere in the database, ascending.
  std::vector<Item> item_universe() const;

  friend bool operator==(const TransactionDatabase&, const TransactionDatabase&) = default;

 private:
  std::vector<Transaction> transactions_;
};

/// Strictly increasing positions (into the original database) of the
/// transactions containing a pattern. Size equals the pattern's support.
struct Tidset {
  std::vector<Pos> positions;

  std::size_t support() const { return positions.size(); }

  friend bool operator==(const Tidset&, const Tidset&) = default;
};

/// Number of transactions strictly between positions a and b. Requires a < b.
std::uint32_t distance(Pos a, Pos b);

/// Positions of the transactions containing every item of `pattern`.
/// The empty pattern matches every transaction.
Tidset tidset_of(const TransactionDatabase& db, std::span<const Item> pattern);

/// Intersection of two tidsets (both strictly increasing).
Tidset intersect(const Tidset& a, const Tidset& b);

/// Vertical view of the database: every occurring item with its tidset,
/// ascending by item id.
std::vector<std::pair<Item, Tidset>> item_tidsets(const TransactionDatabase& db);

/// Raised by the text readers; carries the 1-based input line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the line-per-transaction text format: whitespace-separated
/// non-negative item ids, one transaction per line, blank line = empty
/// transaction. Duplicate ids within a line collapse to one item.
TransactionDatabase read_database(std::istream& in);

/// Writes ascending item ids separated by single spaces, one transaction
/// per line, "\n" line ends.
void write_database(const TransactionDatabase& db, std::ostream& out);

TransactionDatabase load_database_file(const std::string& path);
void save_database_file(const TransactionDatabase& db, const std::string& path);

}  // namespace bclat
