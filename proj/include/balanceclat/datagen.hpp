#pragma once

#include <cstdint>

#include "balanceclat/transactions.hpp"

namespace bclat {

/// Configuration for the planted-pattern generator. A pattern of
/// pattern_size items (ids 1..pattern_size) is scheduled every `period`
/// transactions, i.e. at positions period-1, 2*period-1, ...; each
/// scheduled item is dropped independently with probability
/// noise_percent/100. The remaining items (pattern_size+1..n_items)
/// appear in every transaction independently with probability
/// background_density.
struct GeneratorConfig {
  std::uint32_t n_transactions = 2000;
  std::uint32_t n_items = 200;
  std::uint32_t pattern_size = 5;
  std::uint32_t period = 4;
  double noise_percent = 0.0;       // [0, 100]
  double background_density = 0.0;  // [0, 1]
  std::uint64_t seed = 1;
};

/// Deterministic in the config; identical configs give byte-identical
/// serialized databases across platforms.
TransactionDatabase generate(const GeneratorConfig& config);

/// Unstructured random database: item ids 1..n_items, each present in
/// each transaction independently with probability density.
TransactionDatabase generate_random(std::uint32_t n_transactions,
                                    std::uint32_t n_items, double density,
                                    std::uint64_t seed);

}  // namespace bclat
