#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fim/counting.hpp"
#include "fim/vertical.hpp"
#include "testdata.hpp"

using namespace fim;

namespace {

HorizontalDb parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_horizontal(in);
}

}  // namespace

TEST_CASE("count_items counts transactions per item") {
  const HorizontalDb db = parse_text("1 2\n1\n");
  const ItemCounts c = count_items(db);
  CHECK(c.counts == std::vector<std::uint32_t>{2, 1});
}

TEST_CASE("count_items on an empty database") {
  const HorizontalDb db;
  CHECK(count_items(db).counts.empty());
}

TEST_CASE("count_items sums to total occurrences and ignores worker count") {
  std::mt19937 rng(3);
  for (int round = 0; round < 20; ++round) {
    const HorizontalDb db = testdata::random_db(rng);
    const ItemCounts one = count_items(db, 1);
    const ItemCounts many = count_items(db, 5);
    CHECK(one.counts == many.counts);
    std::uint64_t sum = 0;
    for (auto c : one.counts) sum += c;
    CHECK(sum == total_occurrences(db));
  }
}

TEST_CASE("chess-shaped dataset counts 75 distinct items") {
  const ItemCounts c = count_items(testdata::dataset("chess"));
  REQUIRE(c.counts.size() == 75);
  CHECK(std::all_of(c.counts.begin(), c.counts.end(), [](auto n) { return n >= 1; }));
}

TEST_CASE("frequent_items filters and sorts ascending") {
  ItemCounts c;
  c.counts = {2, 1};  // items 0 and 1
  CHECK(frequent_items(c, 2) == std::vector<ItemId>{0});
  c.counts = {2, 2};
  CHECK(frequent_items(c, 1) == std::vector<ItemId>{0, 1});
  CHECK(frequent_items(c, 3).empty());
}

TEST_CASE("frequent items on T10 match an independent scan of the raw file") {
  const HorizontalDb& db = testdata::dataset("T10I4D100K");
  const std::string path = "t10_scan_check.dat";
  {
    std::ofstream out(path);
    serialize(db, out);
  }

  // Independent route: count original tokens straight off the file text.
  std::map<std::int64_t, std::uint64_t> token_counts;
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::int64_t token;
      while (ls >> token) ++token_counts[token];
    }
  }
  const std::uint64_t min_sup =
      resolve_min_sup(SupportThreshold::of_fraction(0.05), db.n_transactions());
  std::vector<std::int64_t> expected;
  for (const auto& [token, count] : token_counts) {
    if (count >= min_sup) expected.push_back(token);
  }

  std::vector<std::int64_t> actual;
  for (ItemId i : frequent_items(count_items(db), min_sup)) actual.push_back(db.item_names[i]);
  std::sort(actual.begin(), actual.end());
  CHECK(actual == expected);
  std::remove(path.c_str());
}

TEST_CASE("triangular matrix counts pairs of a transaction") {
  const HorizontalDb db = parse_text("1 2 3\n");
  const TriangularMatrix m = build_tri_matrix(db, db.dim());
  REQUIRE(m.enabled());
  CHECK(m.pair_support(0, 1) == 1);
  CHECK(m.pair_support(0, 2) == 1);
  CHECK(m.pair_support(1, 2) == 1);
}

TEST_CASE("triangular matrix accumulates duplicate transactions") {
  const HorizontalDb db = parse_text("1 2\n1 2\n");
  const TriangularMatrix m = build_tri_matrix(db, db.dim());
  CHECK(m.pair_support(0, 1) == 2);
}

TEST_CASE("pair_support is symmetric and validates its arguments") {
  const HorizontalDb db = parse_text("1 2 3\n1 3\n");
  const TriangularMatrix m = build_tri_matrix(db, db.dim());
  CHECK(m.pair_support(2, 0) == 2);  // tokens 3 and 1 co-occur twice
  CHECK(m.pair_support(0, 2) == 2);
  CHECK_THROWS_AS(m.pair_support(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(m.pair_support(0, 9), std::out_of_range);
  CHECK_THROWS_AS(TriangularMatrix{}.pair_support(0, 1), std::logic_error);
}

TEST_CASE("memory guard disables the matrix") {
  const HorizontalDb db = parse_text("1 2 3\n");
  const TriangularMatrix m = build_tri_matrix(db, 100000, 1, /*guard_bytes=*/1024);
  CHECK_FALSE(m.enabled());
}

TEST_CASE("matrix agrees with exhaustive pair counting on small databases") {
  std::mt19937 rng(17);
  for (int round = 0; round < 20; ++round) {
    const HorizontalDb db = testdata::random_db(rng, /*max_items=*/8);
    const TriangularMatrix m = build_tri_matrix(db, db.dim());
    for (ItemId i = 0; i < db.dim(); ++i) {
      for (ItemId j = i + 1; j < db.dim(); ++j) {
        std::uint32_t expected = 0;
        for (const auto& tx : db.transactions) {
          const bool has_i = std::binary_search(tx.begin(), tx.end(), i);
          const bool has_j = std::binary_search(tx.begin(), tx.end(), j);
          if (has_i && has_j) ++expected;
        }
        CHECK(m.pair_support(i, j) == expected);
      }
    }
  }
}

TEST_CASE("matrix merge is independent of the worker count") {
  std::mt19937 rng(23);
  for (int round = 0; round < 10; ++round) {
    const HorizontalDb db = testdata::random_db(rng);
    const TriangularMatrix one = build_tri_matrix(db, db.dim(), 1);
    const TriangularMatrix many = build_tri_matrix(db, db.dim(), 7);
    for (ItemId i = 0; i < db.dim(); ++i) {
      for (ItemId j = i + 1; j < db.dim(); ++j) {
        CHECK(one.pair_support(i, j) == many.pair_support(i, j));
      }
    }
  }
}

TEST_CASE("matrix cells equal vertical tidset intersections on mushroom") {
  const HorizontalDb& mushroom = testdata::dataset("mushroom");
  const std::uint64_t min_sup =
      resolve_min_sup(SupportThreshold::of_fraction(0.4), mushroom.n_transactions());
  const std::vector<ItemId> freq = frequent_items(count_items(mushroom), min_sup);
  REQUIRE(freq.size() >= 2);

  const HorizontalDb filtered = filter_transactions(mushroom, freq);
  const TriangularMatrix m = build_tri_matrix(filtered, filtered.dim());
  const VerticalDb v = build_vertical(filtered);

  for (std::size_t a = 0; a < v.entries.size(); ++a) {
    for (std::size_t b = a + 1; b < v.entries.size(); ++b) {
      std::vector<Tid> common;
      std::set_intersection(v.entries[a].tids.begin(), v.entries[a].tids.end(),
                            v.entries[b].tids.begin(), v.entries[b].tids.end(),
                            std::back_inserter(common));
      CHECK(m.pair_support(v.entries[a].item, v.entries[b].item) == common.size());
    }
  }
}
