#include "balanceclat/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace bclat {

namespace {

std::uint64_t count_set(const std::vector<char>& flags) {
  return static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), 1));
}

// w = 0 admits a midpoint search: (L,M,R) is 0-good iff M sits exactly
// halfway, so each (L,R) pair with an even position sum contributes at
// most one triple.
StabilityScore stability_value_midpoint(const Tidset& tids) {
  const auto& pos = tids.positions;
  const std::size_t m = pos.size();
  std::vector<char> is_left(m, 0), is_right(m, 0);
  StabilityScore score;
  for (std::size_t i = 0; i + 2 < m; ++i) {
    for (std::size_t k = i + 2; k < m; ++k) {
      std::uint64_t sum = std::uint64_t{pos[i]} + pos[k];
      if (sum % 2 != 0) continue;
      Pos mid = static_cast<Pos>(sum / 2);
      if (std::binary_search(pos.begin() + i + 1, pos.begin() + k, mid)) {
        ++score.triples;
        is_left[i] = 1;
        is_right[k] = 1;
      }
    }
  }
  score.left_endpoints = count_set(is_left);
  score.right_endpoints = count_set(is_right);
  return score;
}

}  // namespace

StabilityScore stability_value_naive(const Tidset& tids, std::uint32_t w) {
  const auto& pos = tids.positions;
  const std::size_t m = pos.size();
  std::vector<char> is_left(m, 0), is_right(m, 0);
  StabilityScore score;
  for (std::size_t i = 0; i + 2 < m; ++i) {
    for (std::size_t j = i + 1; j + 1 < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        // distance(L,M) - distance(M,R) collapses to 2*M - L - R.
        std::int64_t skew = 2 * std::int64_t{pos[j]} - pos[i] - pos[k];
        if (std::llabs(skew) <= 2 * std::int64_t{w}) {
          ++score.triples;
          is_left[i] = 1;
          is_right[k] = 1;
        }
      }
    }
  }
  score.left_endpoints = count_set(is_left);
  score.right_endpoints = count_set(is_right);
  return score;
}

StabilityScore stability_value(const Tidset& tids, std::uint32_t w) {
  if (w == 0) return stability_value_midpoint(tids);
  return stability_value_naive(tids, w);
}

namespace {

struct Node {
  Itemset items;
  Tidset tids;
  StabilityScore score;
};

void emit(const Node& node, std::vector<StablePatternResult>& out) {
  out.push_back(StablePatternResult{node.items, node.score, node.tids.support()});
}

bool survives(const Node& node, const StabilityParams& params) {
  return node.tids.support() >= params.minsup && node.score.value() >= params.minstable;
}

void grow(const Node& node, std::span<const Node> siblings,
          const StabilityParams& params, std::vector<StablePatternResult>& out) {
  emit(node, out);
  std::vector<Node> children;
  for (const Node& sibling : siblings) {
    Node child;
    child.tids = intersect(node.tids, sibling.tids);
    child.score = stability_value(child.tids, params.w);
    if (!survives(child, params)) continue;
    child.items = node.items;
    child.items.push_back(sibling.items.back());
    children.push_back(std::move(child));
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    grow(children[i], std::span(children).subspan(i + 1), params, out);
  }
}

bool stable_order(const StablePatternResult& a, const StablePatternResult& b) {
  if (a.score.value() != b.score.value()) return a.score.value() > b.score.value();
  return std::lexicographical_compare(a.items.begin(), a.items.end(),
                                      b.items.begin(), b.items.end());
}

}  // namespace

std::vector<StablePatternResult> mine_stable(const TransactionDatabase& db,
                                             const StabilityParams& params,
                                             unsigned threads) {
  if (params.minsup < 1) throw std::invalid_argument("minsup must be >= 1");

  std::vector<Node> roots;
  for (auto& [item, tids] : item_tidsets(db)) {
    Node node;
    node.score = stability_value(tids, params.w);
    node.tids = std::move(tids);
    if (!survives(node, params)) continue;
    node.items = {item};
    roots.push_back(std::move(node));
  }

  std::vector<StablePatternResult> results;
  if (threads <= 1 || roots.size() <= 1) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      grow(roots[i], std::span(roots).subspan(i + 1), params, results);
    }
  } else {
    std::vector<std::vector<StablePatternResult>> buffers(roots.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1)) {
        grow(roots[i], std::span(roots).subspan(i + 1), params, buffers[i]);
      }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<std::size_t>(threads, roots.size());
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& buffer : buffers) {
      std::move(buffer.begin(), buffer.end(), std::back_inserter(results));
    }
  }

  std::sort(results.begin(), results.end(), stable_order);
  return results;
}

}  // namespace bclat
