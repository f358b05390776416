// Horizontal transaction databases: parsing, support thresholds, transaction
// filtering and replication.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fim/types.hpp"

namespace fim {

// Ordered list of transactions, each a strictly ascending, duplicate-free
// list of dense item ids. Dense ids are assigned by first appearance in the
// input; item_names maps each dense id back to the original integer token.
struct HorizontalDb {
  std::vector<std::vector<ItemId>> transactions;
  std::vector<std::int64_t> item_names;
  ItemId max_item = 0;  // largest dense id in item_names, 0 when empty

  std::size_t n_transactions() const { return transactions.size(); }
  // One past the largest assignable item id; the dimension of any per-item
  // array indexed by dense id.
  std::size_t dim() const { return item_names.size(); }
};

// Minimum support given either as a fraction of the database size in (0,1]
// or as an absolute transaction count >= 1.
struct SupportThreshold {
  double fraction = 0.0;
  std::uint64_t absolute = 0;
  bool is_fraction = false;

  static SupportThreshold of_fraction(double f);
  static SupportThreshold of_count(std::uint64_t c);
  // "0.05" -> fraction, "7" -> absolute count.
  static SupportThreshold parse(const std::string& text);

  std::string to_string() const;
};

// Fraction f resolves to ceil(f * n); absolute counts pass through.
std::uint64_t resolve_min_sup(const SupportThreshold& t, std::size_t n_transactions);

// One transaction per non-empty line, whitespace-separated integer tokens
// (the FIMI/SPMF convention). Line k becomes tid k. Throws parse_error on
// empty input or non-integer tokens (with the offending line number).
HorizontalDb parse_horizontal(std::istream& in);
HorizontalDb parse_horizontal_file(const std::string& path);

// Inverse of parse_horizontal: original tokens, single-space separated.
void serialize(const HorizontalDb& db, std::ostream& out);

std::uint64_t total_occurrences(const HorizontalDb& db);

// Keeps only the given items in every transaction (order preserved), drops
// transactions that become empty; surviving transactions are renumbered 1..m.
// keep_items must be sorted ascending.
HorizontalDb filter_transactions(const HorizontalDb& db, std::span<const ItemId> keep_items);

// Repeats the transaction list factor times; tids renumber 1..factor*n.
HorizontalDb replicate(const HorizontalDb& db, std::size_t factor);

}  // namespace fim
