#include "fim/bench.hpp"

#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>

#include "fim/datagen.hpp"
#include "fim/partitioning.hpp"

namespace fim {

const char* const kBenchCsvHeader =
    "dataset,variant,min_sup,workers,replication,p,tri_matrix,"
    "phase1_s,phase2_s,phase3_s,phase4_s,total_s,itemsets,"
    "workload_max_mean,filtered_reduction_pct";

namespace {

std::string dataset_label(const std::string& src) {
  const auto slash = src.find_last_of('/');
  return slash == std::string::npos ? src : src.substr(slash + 1);
}

HorizontalDb load_dataset(const std::string& src) {
  if (std::filesystem::exists(src)) return parse_horizontal_file(src);
  return datagen::make_preset(src);  // not a file: try the generator presets
}

void write_row(std::ostream& csv, const std::string& dataset, Variant variant,
               const SupportThreshold& min_sup, unsigned workers, std::size_t replication,
               unsigned p, TriMatrixMode tri, const MiningResult& result) {
  const auto& m = result.metrics;
  csv << dataset << ',' << to_string(variant) << ',' << min_sup.to_string() << ',' << workers
      << ',' << replication << ',' << p << ',' << to_string(tri);
  csv << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < 4; ++i) {
    csv << ',' << (i < m.phases.size() ? m.phases[i].seconds : 0.0);
  }
  csv << ',' << m.total_seconds << ',' << result.itemsets.size();
  if (m.partition_workloads.empty()) {
    csv << ',';
  } else {
    PartitionPlan plan;
    plan.p = static_cast<unsigned>(m.partition_workloads.size());
    plan.workloads = m.partition_workloads;
    csv << ',' << std::setprecision(4) << workload_stats(plan).max_mean_ratio;
  }
  csv << ',' << std::setprecision(4) << m.filtered_reduction_pct << '\n';
  csv.unsetf(std::ios::fixed);
}

}  // namespace

void run_bench(const BenchSpec& spec, std::ostream& csv, std::ostream& log) {
  if (spec.datasets.empty() || spec.variants.empty() || spec.min_sups.empty() ||
      spec.worker_counts.empty() || spec.replications.empty() || spec.repeat < 1) {
    throw bench_error("bench spec needs non-empty sweep lists and repeat >= 1");
  }

  csv << kBenchCsvHeader << '\n';
  for (const auto& source : spec.datasets) {
    const HorizontalDb base = load_dataset(source);
    const std::string label = dataset_label(source);
    for (std::size_t repl : spec.replications) {
      const HorizontalDb db = replicate(base, repl);
      for (const auto& min_sup : spec.min_sups) {
        // Every run in this cell must mine the same itemset count.
        std::size_t expected = 0;
        bool have_expected = false;
        for (Variant variant : spec.variants) {
          for (unsigned workers : spec.worker_counts) {
            MiningConfig cfg;
            cfg.variant = variant;
            cfg.min_sup = min_sup;
            cfg.tri_matrix = spec.tri_matrix;
            cfg.p = spec.p;
            cfg.workers = workers;
            if (spec.warmup) run(db, cfg);
            for (unsigned rep = 0; rep < spec.repeat; ++rep) {
              const MiningResult result = run(db, cfg);
              write_row(csv, label, variant, min_sup, workers, repl, spec.p, spec.tri_matrix,
                        result);
              log << label << " repl=" << repl << " min_sup=" << min_sup.to_string() << " "
                  << to_string(variant) << " workers=" << workers << " -> "
                  << result.itemsets.size() << " itemsets, " << std::fixed
                  << std::setprecision(3) << result.metrics.total_seconds << "s\n";
              log.unsetf(std::ios::fixed);
              if (!have_expected) {
                expected = result.itemsets.size();
                have_expected = true;
              } else if (result.itemsets.size() != expected) {
                throw bench_error("itemset count disagreement on " + label + " at min_sup " +
                                  min_sup.to_string() + ": " + to_string(variant) + " found " +
                                  std::to_string(result.itemsets.size()) + ", expected " +
                                  std::to_string(expected));
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace fim
