#pragma once

#include <initializer_list>
#include <vector>

#include "balanceclat/transactions.hpp"

namespace bclat::testing {

inline TransactionDatabase db_from(std::initializer_list<std::vector<Item>> rows) {
  std::vector<Transaction> transactions;
  for (const auto& row : rows) transactions.emplace_back(row);
  return TransactionDatabase(std::move(transactions));
}

// Nine transactions; {1,2} (= {A,B}) recurs at every second position.
inline TransactionDatabase example_db() {
  return db_from({{1, 2, 3},
                  {3, 4},
                  {1, 2, 5},
                  {5, 6},
                  {1, 2, 6},
                  {5, 6},
                  {1, 2, 6},
                  {5, 6},
                  {1, 2, 3}});
}

// example_db with two {5,6} transactions inserted after the first
// transaction and two before the last; {1,2} sits at 0, 4, 6, 8, 12.
inline TransactionDatabase example_db_padded() {
  return db_from({{1, 2, 3},
                  {5, 6},
                  {5, 6},
                  {3, 4},
                  {1, 2, 5},
                  {5, 6},
                  {1, 2, 6},
                  {5, 6},
                  {1, 2, 6},
                  {5, 6},
                  {5, 6},
                  {5, 6},
                  {1, 2, 3}});
}

// Item 1 at positions 0, 3, 6, 9; item 2 at 3, 6, 9, 12.
inline TransactionDatabase overlap_db() {
  std::vector<Transaction> rows(13);
  for (Pos p : {0, 3, 6, 9}) rows[p] = Transaction({1});
  for (Pos p : {3, 6, 9, 12}) {
    std::vector<Item> items = rows[p].items();
    items.push_back(2);
    rows[p] = Transaction(std::move(items));
  }
  return TransactionDatabase(std::move(rows));
}

}  // namespace bclat::testing
