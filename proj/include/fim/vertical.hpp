// Vertical (item -> tidset) database and the support-based total order.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/types.hpp"

namespace fim {

using TidSet = std::vector<Tid>;  // strictly ascending; support = size

struct VerticalEntry {
  ItemId item = 0;
  TidSet tids;

  std::uint32_t support() const { return static_cast<std::uint32_t>(tids.size()); }
};

struct VerticalDb {
  std::vector<VerticalEntry> entries;
};

// Inverts the horizontal database: one entry per item occurring in db, tids
// ascending. Entry order follows dense item id.
VerticalDb build_vertical(const HorizontalDb& db);

// Same, restricted to the given items (sorted ascending).
VerticalDb build_vertical(const HorizontalDb& db, std::span<const ItemId> items);

// Drops entries whose support is below min_sup_count.
void filter_by_support(VerticalDb& v, std::uint64_t min_sup_count);

// Sorts entries by (support ascending, item id ascending). The id tie-break
// makes downstream class partitioning reproducible.
void order_by_support(VerticalDb& v);

}  // namespace fim
