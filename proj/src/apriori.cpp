// Levelwise generate-prune-count baseline. Candidates live in a prefix tree;
// support counting scans transaction partitions in parallel and merges the
// per-worker count arrays.
#include <algorithm>
#include <chrono>
#include <span>

#include "fim/counting.hpp"
#include "fim/pipelines.hpp"

namespace fim {

namespace {

struct TrieNode {
  ItemId item = 0;
  std::int32_t candidate = -1;  // index of the candidate ending here
  std::vector<TrieNode> children;
};

TrieNode build_trie(const std::vector<Itemset>& candidates) {
  TrieNode root;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    TrieNode* node = &root;
    for (ItemId item : candidates[c]) {
      // Candidates arrive in lexicographic order, so each new child belongs
      // at the back.
      if (node->children.empty() || node->children.back().item != item) {
        node->children.push_back({item, -1, {}});
      }
      node = &node->children.back();
    }
    node->candidate = static_cast<std::int32_t>(c);
  }
  return root;
}

// Merge-walk of the sorted children against the sorted transaction suffix.
void count_subsets(const TrieNode& node, std::span<const ItemId> tx,
                   std::vector<std::uint32_t>& counts) {
  std::size_t ci = 0;
  std::size_t ti = 0;
  const auto& children = node.children;
  while (ci < children.size() && ti < tx.size()) {
    const ItemId item = children[ci].item;
    if (item < tx[ti]) {
      ++ci;
    } else if (tx[ti] < item) {
      ++ti;
    } else {
      const TrieNode& child = children[ci];
      if (child.candidate >= 0) ++counts[child.candidate];
      if (!child.children.empty()) count_subsets(child, tx.subspan(ti + 1), counts);
      ++ci;
      ++ti;
    }
  }
}

std::vector<std::uint32_t> count_candidates(const HorizontalDb& db, const TrieNode& trie,
                                            std::size_t n_candidates, unsigned workers) {
  const unsigned w = std::max(1u, workers);
  std::vector<std::vector<std::uint32_t>> partials(w);

#pragma omp parallel for num_threads(w) schedule(static, 1)
  for (unsigned c = 0; c < w; ++c) {
    auto& local = partials[c];
    local.assign(n_candidates, 0);
    const std::size_t lo = db.n_transactions() * c / w;
    const std::size_t hi = db.n_transactions() * (c + 1) / w;
    for (std::size_t t = lo; t < hi; ++t) {
      count_subsets(trie, db.transactions[t], local);
    }
  }

  std::vector<std::uint32_t> counts(n_candidates, 0);
  for (const auto& local : partials) {
    for (std::size_t i = 0; i < n_candidates; ++i) counts[i] += local[i];
  }
  return counts;
}

bool contains(const std::vector<Itemset>& sorted, const Itemset& key) {
  return std::binary_search(sorted.begin(), sorted.end(), key);
}

// Joins pairs of frequent k-itemsets sharing their first k-1 items, then
// prunes candidates with an infrequent k-subset.
std::vector<Itemset> generate_candidates(const std::vector<Itemset>& level) {
  std::vector<Itemset> candidates;
  const std::size_t k = level.empty() ? 0 : level[0].size();
  std::size_t block = 0;
  while (block < level.size()) {
    std::size_t end = block + 1;
    while (end < level.size() &&
           std::equal(level[block].begin(), level[block].end() - 1, level[end].begin(),
                      level[end].end() - 1)) {
      ++end;
    }
    for (std::size_t i = block; i < end; ++i) {
      for (std::size_t j = i + 1; j < end; ++j) {
        Itemset cand = level[i];
        cand.push_back(level[j].back());
        // The two parents are frequent by construction; check the remaining
        // k-1 subsets of size k.
        bool keep = true;
        for (std::size_t drop = 0; drop + 2 < cand.size() && keep; ++drop) {
          Itemset sub;
          sub.reserve(k);
          for (std::size_t x = 0; x < cand.size(); ++x) {
            if (x != drop) sub.push_back(cand[x]);
          }
          keep = contains(level, sub);
        }
        if (keep) candidates.push_back(std::move(cand));
      }
    }
    block = end;
  }
  return candidates;
}

}  // namespace

MiningResult run_apriori(const HorizontalDb& db, const MiningConfig& cfg) {
  MiningResult result;
  const auto start = std::chrono::steady_clock::now();
  auto lap = [&, last = start](const char* name) mutable {
    const auto now = std::chrono::steady_clock::now();
    result.metrics.phases.push_back({name, std::chrono::duration<double>(now - last).count()});
    last = now;
  };

  const std::uint64_t min_sup = resolve_min_sup(cfg.min_sup, db.n_transactions());
  result.metrics.resolved_min_sup = min_sup;

  const ItemCounts counts = count_items(db, cfg.workers);
  std::vector<Itemset> level;
  for (ItemId i : frequent_items(counts, min_sup)) {
    result.itemsets.push_back({{i}, counts.counts[i]});
    level.push_back({i});
  }
  lap("items");

  while (!level.empty()) {
    const std::vector<Itemset> candidates = generate_candidates(level);
    if (candidates.empty()) break;
    const TrieNode trie = build_trie(candidates);
    const std::vector<std::uint32_t> supports =
        count_candidates(db, trie, candidates.size(), cfg.workers);

    level.clear();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (supports[c] >= min_sup) {
        result.itemsets.push_back({candidates[c], supports[c]});
        level.push_back(candidates[c]);
      }
    }
  }
  lap("levelwise");

  std::sort(result.itemsets.begin(), result.itemsets.end(), canonical_less);
  result.metrics.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace fim
