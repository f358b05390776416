// Assignment of equivalence classes to partitions and workload statistics.
//
// Class keys are the dense ranks 0..n-2 of class prefixes in the ascending
// support order, not raw item ids; low ranks carry the largest classes.
#pragma once

#include <cstdint>
#include <vector>

#include "fim/eclat.hpp"

namespace fim {

enum class PartitionScheme { kDefault, kHash, kReverseHash };

const char* to_string(PartitionScheme s);

// Identity: class v runs alone in partition v; requires v < n-1.
unsigned assign_default(unsigned v, unsigned n);

// v mod p.
unsigned assign_hash(unsigned v, unsigned p);

// v mod p, mirrored to (p-1)-r once v wraps past p.
unsigned assign_reverse_hash(unsigned v, unsigned p);

struct PartitionPlan {
  unsigned p = 0;
  std::vector<unsigned> assignment;      // class rank -> partition id
  std::vector<std::uint64_t> workloads;  // per-partition member totals
};

// Assigns every class by its rank. The default scheme requires p == number
// of classes (n-1); the hash schemes require p >= 1. Workload is the member
// count of the classes landing in each partition.
PartitionPlan plan_partitions(const std::vector<EquivalenceClass>& classes, PartitionScheme scheme,
                              unsigned p);

struct WorkloadStats {
  std::uint64_t max = 0;
  std::uint64_t min = 0;
  double mean = 0.0;
  double max_mean_ratio = 1.0;
};

WorkloadStats workload_stats(const PartitionPlan& plan);

}  // namespace fim
