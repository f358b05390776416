// Exhaustive ground truth: enumerate every non-empty subset of the frequent
// items and count each one by scanning the transaction masks. Deliberately
// free of tidsets, matrices and candidate pruning.
#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "fim/counting.hpp"
#include "fim/pipelines.hpp"

namespace fim {

MiningResult run_oracle(const HorizontalDb& db, const MiningConfig& cfg) {
  MiningResult result;
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t min_sup = resolve_min_sup(cfg.min_sup, db.n_transactions());
  result.metrics.resolved_min_sup = min_sup;

  const ItemCounts counts = count_items(db, cfg.workers);
  const std::vector<ItemId> freq = frequent_items(counts, min_sup);
  const unsigned k = static_cast<unsigned>(freq.size());
  if (k > kOracleMaxItems) {
    throw oracle_refused("oracle refuses " + std::to_string(k) + " frequent items (bound " +
                         std::to_string(kOracleMaxItems) + "); use a higher min_sup or a variant");
  }
  if (k == 0) {
    result.metrics.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  std::vector<std::int32_t> bit_of(db.dim(), -1);
  for (unsigned b = 0; b < k; ++b) bit_of[freq[b]] = static_cast<std::int32_t>(b);

  // Transactions collapse to masks over the frequent items; identical masks
  // are grouped so each subset scans one entry per distinct mask.
  std::unordered_map<std::uint32_t, std::uint32_t> mask_count;
  for (const auto& tx : db.transactions) {
    std::uint32_t mask = 0;
    for (ItemId i : tx) {
      if (bit_of[i] >= 0) mask |= 1u << bit_of[i];
    }
    if (mask) ++mask_count[mask];
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> groups(mask_count.begin(),
                                                              mask_count.end());

  const std::uint64_t n_subsets = (1ull << k) - 1;
  const unsigned w = std::max(1u, cfg.workers);
  std::vector<std::vector<CountedItemset>> found(w);

#pragma omp parallel for num_threads(w) schedule(static, 1)
  for (unsigned c = 0; c < w; ++c) {
    auto& local = found[c];
    const std::uint64_t lo = 1 + n_subsets * c / w;
    const std::uint64_t hi = 1 + n_subsets * (c + 1) / w;
    for (std::uint64_t s = lo; s < hi; ++s) {
      const auto subset = static_cast<std::uint32_t>(s);
      std::uint64_t support = 0;
      for (const auto& [mask, count] : groups) {
        if ((mask & subset) == subset) support += count;
      }
      if (support >= min_sup) {
        Itemset items;
        for (unsigned b = 0; b < k; ++b) {
          if (subset & (1u << b)) items.push_back(freq[b]);
        }
        local.push_back({std::move(items), static_cast<std::uint32_t>(support)});
      }
    }
  }

  for (auto& buf : found) {
    result.itemsets.insert(result.itemsets.end(), std::make_move_iterator(buf.begin()),
                           std::make_move_iterator(buf.end()));
  }
  std::sort(result.itemsets.begin(), result.itemsets.end(), canonical_less);
  result.metrics.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace fim
