#include "fim/eclat.hpp"

#include <algorithm>

namespace fim {

TidSet intersect(std::span<const Tid> a, std::span<const Tid> b) {
  TidSet out;
  out.reserve(std::min(a.size(), b.size()));
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      out.push_back(*ia);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::vector<EquivalenceClass> build_equivalence_classes(const VerticalDb& ordered,
                                                        std::uint64_t min_sup_count,
                                                        const TriangularMatrix* matrix,
                                                        unsigned workers) {
  const std::size_t n = ordered.entries.size();
  if (n < 2) return {};
  std::vector<EquivalenceClass> classes(n - 1);
  const bool use_matrix = matrix != nullptr && matrix->enabled();
  const unsigned w = std::max(1u, workers);
  (void)w;

  // Class i joins entry i against every later entry; early ranks do the most
  // pair work, so schedule dynamically.
#pragma omp parallel for num_threads(w) schedule(dynamic)
  for (std::size_t i = 0; i < n - 1; ++i) {
    const auto& base = ordered.entries[i];
    EquivalenceClass ec;
    ec.prefix = base.item;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& other = ordered.entries[j];
      if (use_matrix && matrix->pair_support(base.item, other.item) < min_sup_count) {
        continue;  // certified infrequent, skip the intersection
      }
      TidSet tids = intersect(base.tids, other.tids);
      if (tids.size() >= min_sup_count) {
        ec.members.push_back({other.item, std::move(tids)});
      }
    }
    classes[i] = std::move(ec);
  }
  return classes;
}

namespace {

void emit(const std::vector<ItemId>& prefix, ItemId last, std::uint32_t support,
          std::vector<CountedItemset>& out) {
  CountedItemset ci;
  ci.items.reserve(prefix.size() + 1);
  ci.items = prefix;
  ci.items.push_back(last);
  std::sort(ci.items.begin(), ci.items.end());  // class order is by support, not id
  ci.support = support;
  out.push_back(std::move(ci));
}

// Algorithm: for each atom i, join with every later atom j; frequent joins
// are emitted and become the next-level class, recursed with the extended
// prefix.
void recurse(std::vector<ItemId>& prefix, const std::vector<EqClassAtom>& atoms,
             std::uint64_t min_sup_count, std::vector<CountedItemset>& out) {
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    std::vector<EqClassAtom> next;
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      TidSet tids = intersect(atoms[i].tids, atoms[j].tids);
      if (tids.size() >= min_sup_count) {
        prefix.push_back(atoms[i].item);
        emit(prefix, atoms[j].item, static_cast<std::uint32_t>(tids.size()), out);
        prefix.pop_back();
        next.push_back({atoms[j].item, std::move(tids)});
      }
    }
    if (!next.empty()) {
      prefix.push_back(atoms[i].item);
      recurse(prefix, next, min_sup_count, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

void bottom_up(const EquivalenceClass& ec, std::uint64_t min_sup_count,
               std::vector<CountedItemset>& out) {
  std::vector<ItemId> prefix{ec.prefix};
  recurse(prefix, ec.members, min_sup_count, out);
}

}  // namespace fim
