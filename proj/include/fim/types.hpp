// Shared scalar types for the mining engine.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fim {

using ItemId = std::uint32_t;  // dense 0-based item id
using Tid = std::uint32_t;     // 1-based transaction id
using Itemset = std::vector<ItemId>;

struct CountedItemset {
  Itemset items;  // ascending item ids
  std::uint32_t support = 0;

  friend bool operator==(const CountedItemset&, const CountedItemset&) = default;
};

// Canonical order: shorter itemsets first, lexicographic within a length.
inline bool canonical_less(const CountedItemset& a, const CountedItemset& b) {
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
  if (a.items != b.items) return a.items < b.items;
  return a.support < b.support;
}

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fim
