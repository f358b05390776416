// Frequent 1-item counting and the triangular candidate-pair support matrix.
#pragma once

#include <cstdint>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/types.hpp"

namespace fim {

struct ItemCounts {
  std::vector<std::uint32_t> counts;  // indexed by dense item id
};

// counts[i] = number of transactions containing item i. Transactions are
// duplicate-free, so occurrence count equals support count.
ItemCounts count_items(const HorizontalDb& db, unsigned workers = 1);

// Items with count >= min_sup_count, ascending by item id.
std::vector<ItemId> frequent_items(const ItemCounts& counts, std::uint64_t min_sup_count);

// Upper-triangular counter array over item pairs i < j; cell(i,j) holds the
// support of the 2-itemset {i,j}. A disabled matrix answers no queries.
class TriangularMatrix {
 public:
  static constexpr std::uint64_t kDefaultGuardBytes = 256ull << 20;

  TriangularMatrix() = default;
  explicit TriangularMatrix(std::size_t dim);

  bool enabled() const { return enabled_; }
  std::size_t dim() const { return dim_; }

  // Symmetric access: pair_support(i,j) == pair_support(j,i). Requires an
  // enabled matrix, i != j, both < dim.
  std::uint32_t pair_support(ItemId i, ItemId j) const;

  void add(ItemId i, ItemId j);  // i < j
  void merge_from(const TriangularMatrix& other);

  static std::uint64_t cell_bytes(std::size_t dim);

 private:
  std::size_t index(ItemId i, ItemId j) const {  // i < j
    return static_cast<std::size_t>(i) * dim_ - static_cast<std::size_t>(i) * (i + 1) / 2 +
           (j - i - 1);
  }

  std::size_t dim_ = 0;
  std::vector<std::uint32_t> cells_;
  bool enabled_ = false;
};

// Counts every ordered pair i < j of every transaction, in parallel: each
// worker accumulates a private partial matrix over a transaction range and
// the partials merge by elementwise addition. Returns a disabled matrix when
// the cell array would exceed guard_bytes.
TriangularMatrix build_tri_matrix(const HorizontalDb& db, std::size_t dim, unsigned workers = 1,
                                  std::uint64_t guard_bytes = TriangularMatrix::kDefaultGuardBytes);

}  // namespace fim
