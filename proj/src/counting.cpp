#include "fim/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace fim {

namespace {

// Contiguous chunk [begin, end) of n elements for worker c of w.
std::pair<std::size_t, std::size_t> chunk(std::size_t n, unsigned w, unsigned c) {
  const std::size_t lo = n * c / w;
  const std::size_t hi = n * (c + 1) / w;
  return {lo, hi};
}

}  // namespace

ItemCounts count_items(const HorizontalDb& db, unsigned workers) {
  const unsigned w = std::max(1u, workers);
  const std::size_t dim = db.dim();
  std::vector<std::vector<std::uint32_t>> partials(w);

#pragma omp parallel for num_threads(w) schedule(static, 1)
  for (unsigned c = 0; c < w; ++c) {
    auto& local = partials[c];
    local.assign(dim, 0);
    const auto [lo, hi] = chunk(db.n_transactions(), w, c);
    for (std::size_t t = lo; t < hi; ++t) {
      for (ItemId i : db.transactions[t]) ++local[i];
    }
  }

  ItemCounts result;
  result.counts.assign(dim, 0);
  for (const auto& local : partials) {
    for (std::size_t i = 0; i < dim; ++i) result.counts[i] += local[i];
  }
  return result;
}

std::vector<ItemId> frequent_items(const ItemCounts& counts, std::uint64_t min_sup_count) {
  std::vector<ItemId> out;
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    if (counts.counts[i] >= min_sup_count) out.push_back(static_cast<ItemId>(i));
  }
  return out;
}

TriangularMatrix::TriangularMatrix(std::size_t dim) : dim_(dim), enabled_(true) {
  cells_.assign(dim < 2 ? 0 : dim * (dim - 1) / 2, 0);
}

std::uint64_t TriangularMatrix::cell_bytes(std::size_t dim) {
  if (dim < 2) return 0;
  const std::uint64_t n = dim;
  return n * (n - 1) / 2 * sizeof(std::uint32_t);
}

std::uint32_t TriangularMatrix::pair_support(ItemId i, ItemId j) const {
  if (!enabled_) throw std::logic_error("pair_support on a disabled matrix");
  if (i == j) throw std::invalid_argument("pair_support requires i != j");
  if (i >= dim_ || j >= dim_) throw std::out_of_range("pair_support: item id out of range");
  if (i > j) std::swap(i, j);
  return cells_[index(i, j)];
}

void TriangularMatrix::add(ItemId i, ItemId j) { ++cells_[index(i, j)]; }

void TriangularMatrix::merge_from(const TriangularMatrix& other) {
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += other.cells_[k];
}

TriangularMatrix build_tri_matrix(const HorizontalDb& db, std::size_t dim, unsigned workers,
                                  std::uint64_t guard_bytes) {
  if (TriangularMatrix::cell_bytes(dim) > guard_bytes) {
    return TriangularMatrix{};  // disabled; caller falls back to intersections
  }
  const unsigned w = std::max(1u, workers);
  std::vector<TriangularMatrix> partials;
  partials.reserve(w);
  for (unsigned c = 0; c < w; ++c) partials.emplace_back(dim);

#pragma omp parallel for num_threads(w) schedule(static, 1)
  for (unsigned c = 0; c < w; ++c) {
    auto& local = partials[c];
    const auto [lo, hi] = chunk(db.n_transactions(), w, c);
    for (std::size_t t = lo; t < hi; ++t) {
      const auto& tx = db.transactions[t];
      for (std::size_t a = 0; a + 1 < tx.size(); ++a) {
        for (std::size_t b = a + 1; b < tx.size(); ++b) local.add(tx[a], tx[b]);
      }
    }
  }

  TriangularMatrix merged = std::move(partials[0]);
  for (unsigned c = 1; c < w; ++c) merged.merge_from(partials[c]);
  return merged;
}

}  // namespace fim
