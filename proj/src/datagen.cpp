#include "fim/datagen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fim::datagen {

namespace {

double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Knuth's method; widths are small so the loop stays short.
std::size_t next_poisson(std::mt19937_64& rng, double lambda) {
  const double limit = std::exp(-lambda);
  std::size_t k = 0;
  double prod = next_uniform(rng);
  while (prod > limit) {
    ++k;
    prod *= next_uniform(rng);
  }
  return k;
}

void set_identity_names(HorizontalDb& db, std::size_t n_items) {
  db.item_names.resize(n_items);
  for (std::size_t i = 0; i < n_items; ++i) db.item_names[i] = static_cast<std::int64_t>(i + 1);
  db.max_item = n_items ? static_cast<ItemId>(n_items - 1) : 0;
}

// Overwrites one slot in a rotating row so every item id occurs at least
// once, keeping row widths and sortedness intact.
void force_presence(HorizontalDb& db, std::size_t n_items,
                    const std::vector<std::pair<std::size_t, std::size_t>>* attr_slot) {
  std::vector<bool> seen(n_items, false);
  for (const auto& tx : db.transactions) {
    for (ItemId i : tx) seen[i] = true;
  }
  std::size_t row = 0;
  for (std::size_t item = 0; item < n_items; ++item) {
    if (seen[item]) continue;
    if (attr_slot) {
      const auto [attr, offset] = (*attr_slot)[item];
      (void)offset;
      db.transactions[row][attr] = static_cast<ItemId>(item);
      row = (row + 1) % db.transactions.size();
    } else {
      for (std::size_t tries = 0; tries < db.transactions.size(); ++tries) {
        auto& tx = db.transactions[row];
        row = (row + 1) % db.transactions.size();
        if (std::find(tx.begin(), tx.end(), static_cast<ItemId>(item)) == tx.end()) {
          tx[item % tx.size()] = static_cast<ItemId>(item);
          std::sort(tx.begin(), tx.end());
          break;
        }
      }
    }
  }
}

}  // namespace

HorizontalDb make_attribute_db(std::size_t rows, std::span<const int> values_per_attribute,
                               double dominance_lo, double dominance_hi, std::uint64_t seed) {
  if (rows == 0 || values_per_attribute.empty()) {
    throw std::invalid_argument("make_attribute_db: empty shape");
  }
  std::mt19937_64 rng(seed);
  const std::size_t attrs = values_per_attribute.size();

  std::size_t n_items = 0;
  std::vector<std::size_t> offset(attrs);
  for (std::size_t a = 0; a < attrs; ++a) {
    if (values_per_attribute[a] < 1) throw std::invalid_argument("attribute needs >= 1 values");
    offset[a] = n_items;
    n_items += static_cast<std::size_t>(values_per_attribute[a]);
  }

  std::vector<double> dominance(attrs);
  for (std::size_t a = 0; a < attrs; ++a) {
    dominance[a] = dominance_lo + (dominance_hi - dominance_lo) * next_uniform(rng);
  }

  HorizontalDb db;
  db.transactions.assign(rows, std::vector<ItemId>(attrs));
  for (std::size_t r = 0; r < rows; ++r) {
    auto& tx = db.transactions[r];
    for (std::size_t a = 0; a < attrs; ++a) {
      const int v = values_per_attribute[a];
      const double x = next_uniform(rng);
      std::size_t value = 0;
      if (x >= dominance[a] && v > 1) {
        // Remaining probability mass splits evenly over the minor values.
        const double rel = (x - dominance[a]) / (1.0 - dominance[a]);
        value = 1 + std::min<std::size_t>(static_cast<std::size_t>(rel * (v - 1)),
                                          static_cast<std::size_t>(v - 2));
      }
      tx[a] = static_cast<ItemId>(offset[a] + value);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> attr_slot(n_items);
  for (std::size_t a = 0; a < attrs; ++a) {
    for (int v = 0; v < values_per_attribute[a]; ++v) {
      attr_slot[offset[a] + static_cast<std::size_t>(v)] = {a, offset[a]};
    }
  }
  set_identity_names(db, n_items);
  force_presence(db, n_items, &attr_slot);
  return db;
}

HorizontalDb make_basket_db(std::size_t rows, std::size_t n_items, double avg_width,
                            std::uint64_t seed) {
  if (rows == 0 || n_items == 0 || avg_width < 1.0) {
    throw std::invalid_argument("make_basket_db: bad shape");
  }
  std::mt19937_64 rng(seed);

  // Item popularity follows a deterministic exponential profile, so item
  // supports spread around mean rows*avg_width/n_items the way the sparse
  // quest-style benchmark datasets do.
  std::vector<double> cumulative(n_items);
  double total = 0.0;
  for (std::size_t i = 0; i < n_items; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(n_items);
    total += -std::log1p(-u);
    cumulative[i] = total;
  }
  for (double& c : cumulative) c /= total;

  auto sample_item = [&]() {
    const double u = next_uniform(rng);
    const auto pos = static_cast<ItemId>(
        std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
    return std::min<ItemId>(pos, static_cast<ItemId>(n_items - 1));
  };

  // A few co-occurring bundles, injected into a share of the rows, give the
  // data frequent itemsets beyond singletons.
  constexpr std::size_t kPatterns = 6;
  constexpr double kInjectProb = 0.45;
  std::vector<std::vector<ItemId>> patterns(kPatterns);
  double pattern_width = 0.0;
  for (auto& pattern : patterns) {
    const std::size_t size = std::min<std::size_t>(2 + rng() % 3, n_items);
    while (pattern.size() < size) {
      const ItemId item = sample_item();
      if (std::find(pattern.begin(), pattern.end(), item) == pattern.end()) {
        pattern.push_back(item);
      }
    }
    pattern_width += static_cast<double>(size);
  }
  pattern_width /= kPatterns;

  const double lambda = std::max(1.0, avg_width - kInjectProb * pattern_width);
  const std::size_t max_width = std::min(n_items, static_cast<std::size_t>(avg_width * 3) + 1);
  HorizontalDb db;
  db.transactions.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    auto& tx = db.transactions[r];
    tx.clear();
    if (next_uniform(rng) < kInjectProb) tx = patterns[rng() % kPatterns];
    const std::size_t base = std::clamp<std::size_t>(next_poisson(rng, lambda), 1, max_width);
    const std::size_t target = std::min(n_items, tx.size() + base);
    while (tx.size() < target) {
      const ItemId item = sample_item();
      if (std::find(tx.begin(), tx.end(), item) == tx.end()) tx.push_back(item);
    }
    std::sort(tx.begin(), tx.end());
  }

  set_identity_names(db, n_items);
  force_presence(db, n_items, nullptr);
  return db;
}

HorizontalDb make_preset(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

  if (s == "chess") {
    std::vector<int> values(37, 2);
    values.back() = 3;  // 36 binary attributes plus one ternary: 75 items
    return make_attribute_db(3196, values, 0.70, 0.99, 0xc8e55);
  }
  if (s == "mushroom") {
    const std::vector<int> values{2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5,
                                  6, 6, 6, 7, 7, 7, 8, 8, 9, 10, 3};  // 23 attrs, 119 items
    return make_attribute_db(8124, values, 0.20, 0.95, 0x3a5b00);
  }
  if (s == "c20d10k") {
    std::vector<int> values(20, 10);
    for (std::size_t a = 12; a < 20; ++a) values[a] = 9;  // 192 items
    return make_attribute_db(10000, values, 0.30, 0.90, 0xc20d);
  }
  if (s == "t10i4d100k") return make_basket_db(100000, 870, 10.0, 0x710);
  if (s == "t40i10d100k") return make_basket_db(100000, 1000, 40.0, 0x740);
  throw std::invalid_argument("unknown dataset preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"chess", "mushroom", "c20d10k", "T10I4D100K", "T40I10D100K"};
}

}  // namespace fim::datagen
