// The five Eclat pipeline variants, the levelwise Apriori baseline and the
// exhaustive oracle, all producing one canonical result format.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/types.hpp"

namespace fim {

enum class Variant { kV1, kV2, kV3, kV4, kV5, kApriori, kOracle };

Variant parse_variant(const std::string& name);  // "v1".."v5", "apriori", "oracle"
const char* to_string(Variant v);

enum class TriMatrixMode { kOff, kOn, kAuto };

TriMatrixMode parse_tri_matrix_mode(const std::string& name);  // "off", "on", "auto"
const char* to_string(TriMatrixMode m);

struct MiningConfig {
  Variant variant = Variant::kV1;
  SupportThreshold min_sup;
  TriMatrixMode tri_matrix = TriMatrixMode::kAuto;
  unsigned p = 10;  // partition count for the hash schemes (V4/V5)
  unsigned workers = 1;
  std::uint64_t matrix_guard_bytes = 256ull << 20;
};

struct PhaseTime {
  std::string name;
  double seconds = 0.0;
};

struct RunMetrics {
  std::vector<PhaseTime> phases;
  double total_seconds = 0.0;
  std::vector<std::uint64_t> partition_workloads;
  double filtered_reduction_pct = 0.0;  // item-occurrence reduction, V2+ paths
  std::uint64_t resolved_min_sup = 0;
};

// Canonical mining output: itemsets sorted by (length, lexicographic),
// duplicate-free, every support >= the resolved minimum.
struct MiningResult {
  std::vector<CountedItemset> itemsets;
  RunMetrics metrics;
};

// Thrown when the oracle is asked to enumerate more frequent items than its
// exhaustive bound allows.
struct oracle_refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MiningResult run(const HorizontalDb& db, const MiningConfig& cfg);

MiningResult run_v1(const HorizontalDb& db, const MiningConfig& cfg);
MiningResult run_v2(const HorizontalDb& db, const MiningConfig& cfg);
MiningResult run_v3(const HorizontalDb& db, const MiningConfig& cfg);
MiningResult run_v4(const HorizontalDb& db, const MiningConfig& cfg);
MiningResult run_v5(const HorizontalDb& db, const MiningConfig& cfg);
MiningResult run_apriori(const HorizontalDb& db, const MiningConfig& cfg);
MiningResult run_oracle(const HorizontalDb& db, const MiningConfig& cfg);

// Maximum number of frequent items the oracle will enumerate (2^k subsets).
inline constexpr unsigned kOracleMaxItems = 24;

// One line per itemset: original item tokens in ascending dense-id order,
// then " #SUP: <count>" (SPMF-compatible).
void write_spmf(const MiningResult& result, const HorizontalDb& db, std::ostream& out);
std::string to_spmf(const MiningResult& result, const HorizontalDb& db);

bool same_itemsets(const MiningResult& a, const MiningResult& b);

}  // namespace fim
