#include "balanceclat/miner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace bclat {

namespace {

// One node of the search: an itemset that survived the balance-value
// prune, with its tidset and histograms.
struct Node {
  Itemset items;
  Tidset tids;
  HistogramPair hists;
  std::uint64_t t = 0;
};

void validate(const MiningParams& params) {
  if (params.minnumber < 1) throw std::invalid_argument("minnumber must be >= 1");
  if (params.mindistfreq < 1) throw std::invalid_argument("mindistfreq must be >= 1");
  if (!(params.maxstdev >= 0.0)) throw std::invalid_argument("maxstdev must be >= 0");
  if (!(params.minavg >= 0.0)) throw std::invalid_argument("minavg must be >= 0");
}

void emit_if_balanced(const Node& node, const MiningParams& params,
                      std::vector<BalancedPatternResult>& out) {
  DistanceStats stats =
      stats_restricted(node.hists.successive, params.mindistfreq, params.maxstdev);
  if (stats.stdev <= params.maxstdev && stats.avgdist >= params.minavg) {
    out.push_back(BalancedPatternResult{
        node.items,
        PatternStats{node.t, stats.avgdist, stats.stdev, node.tids.support()},
        node.hists.successive});
  }
}

// Extends `node` with every right sibling, keeps the extensions whose
// balance value reaches minnumber, and recurses per equivalence class.
// Distances always come from original-database positions: the
// intersected tidsets store those directly.
void grow(const Node& node, std::span<const Node> siblings,
          const MiningParams& params, std::vector<BalancedPatternResult>& out) {
  emit_if_balanced(node, params, out);
  if (params.max_pattern_size != 0 && node.items.size() >= params.max_pattern_size) {
    return;
  }
  std::vector<Node> children;
  for (const Node& sibling : siblings) {
    Node child;
    child.tids = intersect(node.tids, sibling.tids);
    child.hists = build_histograms(child.tids, params.ell);
    child.t = balance_value(child.hists.all_pairs);
    if (child.t < params.minnumber) continue;
    child.items = node.items;
    child.items.push_back(sibling.items.back());
    children.push_back(std::move(child));
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    grow(children[i], std::span(children).subspan(i + 1), params, out);
  }
}

std::vector<Node> first_level(const TransactionDatabase& db, const MiningParams& params) {
  std::vector<Node> nodes;
  for (auto& [item, tids] : item_tidsets(db)) {
    Node node;
    node.hists = build_histograms(tids, params.ell);
    node.t = balance_value(node.hists.all_pairs);
    if (node.t < params.minnumber) continue;
    node.items = {item};
    node.tids = std::move(tids);
    nodes.push_back(std::move(node));
  }
  return nodes;
}

}  // namespace

bool result_order(const BalancedPatternResult& a, const BalancedPatternResult& b) {
  if (a.stats.balance_value != b.stats.balance_value) {
    return a.stats.balance_value > b.stats.balance_value;
  }
  return std::lexicographical_compare(a.items.begin(), a.items.end(),
                                      b.items.begin(), b.items.end());
}

std::vector<BalancedPatternResult> mine_balanced(const TransactionDatabase& db,
                                                 const MiningParams& params,
                                                 unsigned threads) {
  validate(params);
  std::vector<Node> roots = first_level(db, params);

  std::vector<BalancedPatternResult> results;
  if (threads <= 1 || roots.size() <= 1) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      grow(roots[i], std::span(roots).subspan(i + 1), params, results);
    }
  } else {
    // First-level branches are independent; workers pull them off a
    // shared counter and collect into per-branch buffers.
    std::vector<std::vector<BalancedPatternResult>> buffers(roots.size());
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

  std::sort(results.begin(), results.end(), result_order);
  return results;
}

}  // namespace bclat
