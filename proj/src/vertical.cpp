#include "fim/vertical.hpp"

#include <algorithm>

namespace fim {

namespace {

VerticalDb invert(const HorizontalDb& db, const std::vector<bool>* keep) {
  const std::size_t dim = db.dim();
  std::vector<std::uint32_t> occurrences(dim, 0);
  for (const auto& tx : db.transactions) {
    for (ItemId i : tx) ++occurrences[i];
  }

  std::vector<TidSet> tidsets(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (occurrences[i] && (!keep || (*keep)[i])) tidsets[i].reserve(occurrences[i]);
  }
  Tid tid = 1;  // tids are assigned over a single ordered pass
  for (const auto& tx : db.transactions) {
    for (ItemId i : tx) {
      if (!keep || (*keep)[i]) tidsets[i].push_back(tid);
    }
    ++tid;
  }

  VerticalDb v;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!tidsets[i].empty()) {
      v.entries.push_back({static_cast<ItemId>(i), std::move(tidsets[i])});
    }
  }
  return v;
}

}  // namespace

VerticalDb build_vertical(const HorizontalDb& db) { return invert(db, nullptr); }

VerticalDb build_vertical(const HorizontalDb& db, std::span<const ItemId> items) {
  std::vector<bool> keep(db.dim(), false);
  for (ItemId i : items) keep.at(i) = true;
  return invert(db, &keep);
}

void filter_by_support(VerticalDb& v, std::uint64_t min_sup_count) {
  std::erase_if(v.entries,
                [min_sup_count](const VerticalEntry& e) { return e.tids.size() < min_sup_count; });
}

void order_by_support(VerticalDb& v) {
  std::sort(v.entries.begin(), v.entries.end(), [](const VerticalEntry& a, const VerticalEntry& b) {
    if (a.tids.size() != b.tids.size()) return a.tids.size() < b.tids.size();
    return a.item < b.item;
  });
}

}  // namespace fim
