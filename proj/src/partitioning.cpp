#include "fim/partitioning.hpp"

#include <algorithm>
#include <stdexcept>

namespace fim {

const char* to_string(PartitionScheme s) {
  switch (s) {
    case PartitionScheme::kDefault: return "default";
    case PartitionScheme::kHash: return "hash";
    case PartitionScheme::kReverseHash: return "reverse_hash";
  }
  return "?";
}

unsigned assign_default(unsigned v, unsigned n) {
  if (n < 2 || v >= n - 1) {
    throw std::out_of_range("assign_default: class key " + std::to_string(v) +
                            " outside [0, n-1) for n = " + std::to_string(n));
  }
  return v;
}

unsigned assign_hash(unsigned v, unsigned p) {
  if (p == 0) throw std::invalid_argument("assign_hash: p must be >= 1");
  return v % p;
}

unsigned assign_reverse_hash(unsigned v, unsigned p) {
  if (p == 0) throw std::invalid_argument("assign_reverse_hash: p must be >= 1");
  const unsigned r = v % p;
  return v >= p ? (p - 1) - r : r;
}

PartitionPlan plan_partitions(const std::vector<EquivalenceClass>& classes, PartitionScheme scheme,
                              unsigned p) {
  const auto n_classes = static_cast<unsigned>(classes.size());
  if (scheme == PartitionScheme::kDefault) {
    if (p != n_classes) {
      throw std::invalid_argument("default partitioning requires p == n-1 (= " +
                                  std::to_string(n_classes) + "), got " + std::to_string(p));
    }
  } else if (p == 0) {
    throw std::invalid_argument("plan_partitions: p must be >= 1");
  }

  PartitionPlan plan;
  plan.p = p;
  plan.assignment.resize(n_classes);
  plan.workloads.assign(p, 0);
  for (unsigned v = 0; v < n_classes; ++v) {
    unsigned id = 0;
    switch (scheme) {
      case PartitionScheme::kDefault: id = assign_default(v, n_classes + 1); break;
      case PartitionScheme::kHash: id = assign_hash(v, p); break;
      case PartitionScheme::kReverseHash: id = assign_reverse_hash(v, p); break;
    }
    plan.assignment[v] = id;
    plan.workloads[id] += classes[v].members.size();
  }
  return plan;
}

WorkloadStats workload_stats(const PartitionPlan& plan) {
  if (plan.p < 1) throw std::invalid_argument("workload_stats: empty plan");
  WorkloadStats s;
  s.max = *std::max_element(plan.workloads.begin(), plan.workloads.end());
  s.min = *std::min_element(plan.workloads.begin(), plan.workloads.end());
  std::uint64_t total = 0;
  for (auto w : plan.workloads) total += w;
  s.mean = static_cast<double>(total) / static_cast<double>(plan.p);
  s.max_mean_ratio = s.mean > 0.0 ? static_cast<double>(s.max) / s.mean : 1.0;
  return s;
}

}  // namespace fim
