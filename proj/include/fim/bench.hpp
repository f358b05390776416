// Benchmark harness: sweeps dataset x variant x min_sup x workers x
// replication and writes one CSV row per run.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/pipelines.hpp"

namespace fim {

struct BenchSpec {
  std::vector<std::string> datasets;  // file paths or generator preset names
  std::vector<Variant> variants;
  std::vector<SupportThreshold> min_sups;
  std::vector<unsigned> worker_counts{1};
  std::vector<std::size_t> replications{1};
  unsigned p = 10;
  TriMatrixMode tri_matrix = TriMatrixMode::kAuto;
  unsigned repeat = 1;
  bool warmup = false;
};

extern const char* const kBenchCsvHeader;

// Runs the full cross-product, repeat times each, appending CSV rows to csv
// and progress lines to log. Runs within one (dataset, replication, min_sup)
// cell must agree on the itemset count; a disagreement is a correctness bug
// and aborts with a bench_error.
struct bench_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void run_bench(const BenchSpec& spec, std::ostream& csv, std::ostream& log);

}  // namespace fim
