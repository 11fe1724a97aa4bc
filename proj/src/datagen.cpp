#include "balanceclat/datagen.hpp"

#include <random>
#include <stdexcept>

namespace bclat {

namespace {

// Uniform double in [0, 1) from the raw 64-bit stream. mt19937_64 has a
// standard-mandated sequence, and this mapping keeps the stream identical
// across platforms (std::uniform_real_distribution does not).
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TransactionDatabase generate(const GeneratorConfig& config) {
  if (config.period < 1) throw std::invalid_argument("period must be >= 1");
  if (config.pattern_size > config.n_items) {
    throw std::invalid_argument("pattern_size must not exceed n_items");
  }
  if (!(config.noise_percent >= 0.0 && config.noise_percent <= 100.0)) {
    throw std::invalid_argument("noise_percent must be in [0, 100]");
  }
  if (!(config.background_density >= 0.0 && config.background_density <= 1.0)) {
    throw std::invalid_argument("background_density must be in [0, 1]");
  }

  std::mt19937_64 rng(config.seed);
  const double drop = config.noise_percent / 100.0;

  std::vector<std::vector<Item>> rows(config.n_transactions);

  // Pattern items 1..pattern_size at positions period-1, 2*period-1, ...
  for (std::uint64_t pos = config.period - 1; pos < config.n_transactions;
       pos += config.period) {
    for (Item item = 1; item <= config.pattern_size; ++item) {
      if (next_uniform(rng) >= drop) rows[pos].push_back(item);
    }
  }

  // Background items pattern_size+1..n_items, everywhere.
  if (config.background_density > 0.0) {
    for (std::uint32_t pos = 0; pos < config.n_transactions; ++pos) {
      for (Item item = config.pattern_size + 1; item <= config.n_items; ++item) {
        if (next_uniform(rng) < config.background_density) rows[pos].push_back(item);
      }
    }
  }

  std::vector<Transaction> transactions;
  transactions.reserve(rows.size());
  for (auto& row : rows) transactions.emplace_back(std::move(row));
  return TransactionDatabase(std::move(transactions));
}

TransactionDatabase generate_random(std::uint32_t n_transactions,
                                    std::uint32_t n_items, double density,
                                    std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must be in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Transaction> transactions;
  transactions.reserve(n_transactions);
  for (std::uint32_t pos = 0; pos < n_transactions; ++pos) {
    std::vector<Item> row;
    for (Item item = 1; item <= n_items; ++item) {
      if (next_uniform(rng) < density) row.push_back(item);
    }
    transactions.emplace_back(std::move(row));
  }
  return TransactionDatabase(std::move(transactions));
}

}  // namespace bclat
