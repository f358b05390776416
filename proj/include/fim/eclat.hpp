// Prefix-based equivalence classes and the bottom-up tidset-intersection
// search over each class sublattice.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fim/counting.hpp"
#include "fim/types.hpp"
#include "fim/vertical.hpp"

namespace fim {

// Sorted-merge intersection of two ascending tid lists.
TidSet intersect(std::span<const Tid> a, std::span<const Tid> b);

// An atom of a 1-length-prefix class: the 2-itemset {class prefix, item}
// together with its tidset. Atoms stored in a class are always frequent.
struct EqClassAtom {
  ItemId item = 0;
  TidSet tids;

  std::uint32_t support() const { return static_cast<std::uint32_t>(tids.size()); }
};

struct EquivalenceClass {
  ItemId prefix = 0;
  std::vector<EqClassAtom> members;  // ordered consistently with the VerticalDb
};

// One class per position i of the ordered vertical database except the last:
// prefix = v[i].item, members = every j > i whose pair {v[i], v[j]} is
// frequent. When a matrix is supplied, pairs it reports below min_sup_count
// are skipped without computing the intersection. Classes that end up empty
// are still emitted so partition accounting sees all n-1 of them.
std::vector<EquivalenceClass> build_equivalence_classes(const VerticalDb& ordered,
                                                        std::uint64_t min_sup_count,
                                                        const TriangularMatrix* matrix = nullptr,
                                                        unsigned workers = 1);

// Recursive pairwise join inside one class: every frequent itemset of size
// >= 3 derivable from the class is appended to out. The 2-itemsets carried
// by the members themselves were certified during class construction and are
// emitted by the caller, not here.
void bottom_up(const EquivalenceClass& ec, std::uint64_t min_sup_count,
               std::vector<CountedItemset>& out);

}  // namespace fim
