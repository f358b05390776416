#include "fim/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace fim {

SupportThreshold SupportThreshold::of_fraction(double f) {
  if (!(f > 0.0) || f > 1.0) {
    throw std::invalid_argument("min_sup fraction must be in (0,1], got " + std::to_string(f));
  }
  SupportThreshold t;
  t.fraction = f;
  t.is_fraction = true;
  return t;
}

SupportThreshold SupportThreshold::of_count(std::uint64_t c) {
  if (c < 1) throw std::invalid_argument("absolute min_sup must be >= 1");
  SupportThreshold t;
  t.absolute = c;
  return t;
}

SupportThreshold SupportThreshold::parse(const std::string& text) {
  const bool fractional = text.find_first_of(".eE") != std::string::npos;
  try {
    std::size_t pos = 0;
    if (fractional) {
      const double f = std::stod(text, &pos);
      if (pos != text.size()) throw std::invalid_argument(text);
      return of_fraction(f);
    }
    const long long c = std::stoll(text, &pos);
    if (pos != text.size() || c < 0) throw std::invalid_argument(text);
    return of_count(static_cast<std::uint64_t>(c));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("min_sup value out of range: " + text);
  }
}

std::string SupportThreshold::to_string() const {
  if (is_fraction) {
    std::ostringstream os;
    os << fraction;
    return os.str();
  }
  return std::to_string(absolute);
}

std::uint64_t resolve_min_sup(const SupportThreshold& t, std::size_t n_transactions) {
  if (n_transactions < 1) throw std::invalid_argument("resolve_min_sup: empty database");
  if (!t.is_fraction) {
    if (t.absolute < 1) throw std::invalid_argument("absolute min_sup must be >= 1");
    return t.absolute;
  }
  if (!(t.fraction > 0.0) || t.fraction > 1.0) {
    throw std::invalid_argument("min_sup fraction must be in (0,1]");
  }
  // Nudge below the product before taking the ceiling so that thresholds like
  // 0.05 * 100 do not land on 6 through floating-point round-up.
  const double product = t.fraction * static_cast<double>(n_transactions);
  auto count = static_cast<std::uint64_t>(std::ceil(product - 1e-9));
  return std::max<std::uint64_t>(count, 1);
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

HorizontalDb parse_horizontal(std::istream& in) {
  HorizontalDb db;
  std::unordered_map<std::int64_t, ItemId> remap;
  std::string line;
  std::size_t line_no = 0;
  std::vector<ItemId> tx;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    tx.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
      if (*p == ' ' || *p == '\t' || *p == '\r') {
        ++p;
        continue;
      }
      std::int64_t token = 0;
      auto [next, ec] = std::from_chars(p, end, token);
      if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t' && *next != '\r')) {
        throw parse_error("line " + std::to_string(line_no) + ": invalid item token");
      }
      p = next;
      auto [it, inserted] = remap.try_emplace(token, static_cast<ItemId>(db.item_names.size()));
      if (inserted) db.item_names.push_back(token);
      tx.push_back(it->second);
    }
    std::sort(tx.begin(), tx.end());
    tx.erase(std::unique(tx.begin(), tx.end()), tx.end());
    db.transactions.push_back(tx);
  }
  if (db.transactions.empty()) throw parse_error("empty database");
  db.max_item = db.item_names.empty() ? 0 : static_cast<ItemId>(db.item_names.size() - 1);
  return db;
}

HorizontalDb parse_horizontal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return parse_horizontal(in);
}

void serialize(const HorizontalDb& db, std::ostream& out) {
  for (const auto& tx : db.transactions) {
    for (std::size_t k = 0; k < tx.size(); ++k) {
      if (k) out << ' ';
      out << db.item_names[tx[k]];
    }
    out << '\n';
  }
}

std::uint64_t total_occurrences(const HorizontalDb& db) {
  std::uint64_t total = 0;
  for (const auto& tx : db.transactions) total += tx.size();
  return total;
}

HorizontalDb filter_transactions(const HorizontalDb& db, std::span<const ItemId> keep_items) {
  std::vector<bool> keep(db.dim(), false);
  for (ItemId i : keep_items) keep.at(i) = true;

  HorizontalDb out;
  out.item_names = db.item_names;
  out.max_item = db.max_item;
  out.transactions.reserve(db.n_transactions());
  std::vector<ItemId> tx;
  for (const auto& src : db.transactions) {
    tx.clear();
    for (ItemId i : src) {
      if (keep[i]) tx.push_back(i);
    }
    if (!tx.empty()) out.transactions.push_back(tx);
  }
  return out;
}

HorizontalDb replicate(const HorizontalDb& db, std::size_t factor) {
  if (factor < 1) throw std::invalid_argument("replicate: factor must be >= 1");
  HorizontalDb out;
  out.item_names = db.item_names;
  out.max_item = db.max_item;
  out.transactions.reserve(db.n_transactions() * factor);
  for (std::size_t r = 0; r < factor; ++r) {
    out.transactions.insert(out.transactions.end(), db.transactions.begin(),
                            db.transactions.end());
  }
  return out;
}

}  // namespace fim
