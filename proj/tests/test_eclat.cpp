#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fim/eclat.hpp"
#include "testdata.hpp"

using namespace fim;

namespace {

HorizontalDb parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_horizontal(in);
}

// The five-item lattice walkthrough: every subset of {1..5} has support 2.
VerticalDb worked_example() {
  const HorizontalDb db = parse_text("1 2 3 4 5\n1 2 3 4 5\n");
  VerticalDb v = build_vertical(db);
  order_by_support(v);
  return v;
}

}  // namespace

TEST_CASE("intersect") {
  CHECK(intersect(TidSet{1, 2, 3}, TidSet{2, 3, 4}) == TidSet{2, 3});
  CHECK(intersect(TidSet{1, 2, 3}, TidSet{}).empty());
  const TidSet x{2, 5, 9};
  CHECK(intersect(x, x) == x);
  CHECK(intersect(TidSet{1, 3}, TidSet{2, 4}).empty());
}

TEST_CASE("worked example: classes over five equally frequent items") {
  const VerticalDb v = worked_example();
  const auto classes = build_equivalence_classes(v, 2);
  REQUIRE(classes.size() == 4);

  const std::vector<std::vector<ItemId>> expected_members{
      {1, 2, 3, 4}, {2, 3, 4}, {3, 4}, {4}};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    CHECK(classes[c].prefix == static_cast<ItemId>(c));
    std::vector<ItemId> members;
    for (const auto& m : classes[c].members) members.push_back(m.item);
    CHECK(members == expected_members[c]);
  }
}

TEST_CASE("worked example: first-level joins per class") {
  const VerticalDb v = worked_example();
  const auto classes = build_equivalence_classes(v, 2);

  const std::vector<std::set<Itemset>> expected{
      {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {0, 3, 4}},
      {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}},
      {{2, 3, 4}},
      {}};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<CountedItemset> out;
    bottom_up(classes[c], 2, out);
    std::set<Itemset> triples;
    for (const auto& ci : out) {
      if (ci.items.size() == 3) triples.insert(ci.items);
    }
    CHECK(triples == expected[c]);
  }
}

TEST_CASE("a single frequent item forms no class") {
  const HorizontalDb db = parse_text("1\n1\n");
  VerticalDb v = build_vertical(db);
  order_by_support(v);
  CHECK(build_equivalence_classes(v, 2).empty());
}

TEST_CASE("classes with no frequent pair are still emitted") {
  const HorizontalDb db = parse_text("1\n1\n2\n2\n3\n3\n");
  VerticalDb v = build_vertical(db);
  order_by_support(v);
  const auto classes = build_equivalence_classes(v, 2);
  REQUIRE(classes.size() == 2);  // n-1 classes even when every pair is infrequent
  CHECK(classes[0].members.empty());
  CHECK(classes[1].members.empty());
}

TEST_CASE("matrix pruning leaves class construction unchanged") {
  const HorizontalDb& chess = testdata::dataset("chess");
  const std::uint64_t min_sup =
      resolve_min_sup(SupportThreshold::of_fraction(0.8), chess.n_transactions());

  VerticalDb v = build_vertical(chess);
  filter_by_support(v, min_sup);
  order_by_support(v);
  const TriangularMatrix matrix = build_tri_matrix(chess, chess.dim());
  REQUIRE(matrix.enabled());

  const auto with = build_equivalence_classes(v, min_sup, &matrix);
  const auto without = build_equivalence_classes(v, min_sup, nullptr);
  REQUIRE(with.size() == without.size());
  for (std::size_t c = 0; c < with.size(); ++c) {
    CHECK(with[c].prefix == without[c].prefix);
    REQUIRE(with[c].members.size() == without[c].members.size());
    for (std::size_t m = 0; m < with[c].members.size(); ++m) {
      CHECK(with[c].members[m].item == without[c].members[m].item);
      CHECK(with[c].members[m].tids == without[c].members[m].tids);
    }
  }
}

TEST_CASE("bottom_up on a one-member class emits nothing") {
  EquivalenceClass ec;
  ec.prefix = 0;
  ec.members.push_back({1, {1, 2, 3}});
  std::vector<CountedItemset> out;
  bottom_up(ec, 2, out);
  CHECK(out.empty());
}

TEST_CASE("bottom_up emits ascending itemsets even under support ordering") {
  // Item 5 is rarer than 1 and 2, so the class order differs from id order.
  const HorizontalDb db = parse_text("1 2 5\n1 2 5\n1 2\n");
  VerticalDb v = build_vertical(db);
  filter_by_support(v, 2);
  order_by_support(v);
  REQUIRE(v.entries[0].item == 2);  // token 5 first, support 2

  const auto classes = build_equivalence_classes(v, 2);
  std::vector<CountedItemset> out;
  for (const auto& ec : classes) bottom_up(ec, 2, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].items == Itemset{0, 1, 2});
  CHECK(out[0].support == 2);
  CHECK(std::is_sorted(out[0].items.begin(), out[0].items.end()));
}
