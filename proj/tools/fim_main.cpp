// Command-line entry point: mine one dataset, sweep a benchmark grid, or
// materialize the bundled synthetic datasets.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "fim/bench.hpp"
#include "fim/datagen.hpp"
#include "fim/dataset.hpp"
#include "fim/partitioning.hpp"
#include "fim/pipelines.hpp"

namespace {

namespace fs = std::filesystem;

// Relative output paths land in FIM_OUTPUT_DIR when it is set.
fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("FIM_OUTPUT_DIR")) return fs::path(dir) / p;
  return p;
}

struct MineArgs {
  std::string input;
  std::string variant = "v1";
  std::string min_sup;
  std::string tri_matrix = "auto";
  std::string output = "frequent_itemsets.txt";
  unsigned partitions = 10;
  unsigned workers = 1;
  unsigned guard_mb = 256;
};

int cmd_mine(const MineArgs& args) {
  fim::MiningConfig cfg;
  cfg.variant = fim::parse_variant(args.variant);
  cfg.min_sup = fim::SupportThreshold::parse(args.min_sup);
  cfg.tri_matrix = fim::parse_tri_matrix_mode(args.tri_matrix);
  cfg.p = args.partitions;
  cfg.workers = args.workers;
  cfg.matrix_guard_bytes = static_cast<std::uint64_t>(args.guard_mb) << 20;

  const fim::HorizontalDb db = fim::parse_horizontal_file(args.input);
  const fim::MiningResult result = fim::run(db, cfg);

  const fs::path out_path = resolve_output(args.output);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path.string());
  fim::write_spmf(result, db, out);

  std::cout << "variant=" << fim::to_string(cfg.variant)
            << " min_sup=" << cfg.min_sup.to_string()
            << " resolved=" << result.metrics.resolved_min_sup
            << " itemsets=" << result.itemsets.size() << std::fixed << std::setprecision(4)
            << " total_s=" << result.metrics.total_seconds;
  std::cout << " phases=";
  for (std::size_t i = 0; i < result.metrics.phases.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << result.metrics.phases[i].name << ':' << result.metrics.phases[i].seconds;
  }
  if (!result.metrics.partition_workloads.empty()) {
    fim::PartitionPlan plan;
    plan.p = static_cast<unsigned>(result.metrics.partition_workloads.size());
    plan.workloads = result.metrics.partition_workloads;
    std::cout << " workload_max_mean=" << fim::workload_stats(plan).max_mean_ratio;
  }
  std::cout << " reduction_pct=" << result.metrics.filtered_reduction_pct
            << " output=" << out_path.string() << '\n';
  return 0;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> variants{"v1", "v2", "v3", "v4", "v5"};
  std::vector<std::string> min_sups;
  std::vector<unsigned> workers{1};
  std::vector<std::size_t> replications{1};
  std::string tri_matrix = "auto";
  std::string out_csv;
  unsigned partitions = 10;
  unsigned repeat = 1;
  bool warmup = false;
};

int cmd_bench(const BenchArgs& args) {
  fim::BenchSpec spec;
  spec.datasets = args.inputs;
  for (const auto& v : args.variants) spec.variants.push_back(fim::parse_variant(v));
  for (const auto& m : args.min_sups) spec.min_sups.push_back(fim::SupportThreshold::parse(m));
  spec.worker_counts = args.workers;
  spec.replications = args.replications;
  spec.p = args.partitions;
  spec.tri_matrix = fim::parse_tri_matrix_mode(args.tri_matrix);
  spec.repeat = args.repeat;
  spec.warmup = args.warmup;

  if (args.out_csv.empty()) {
    fim::run_bench(spec, std::cout, std::cerr);
    return 0;
  }
  const fs::path out_path = resolve_output(args.out_csv);
  std::ofstream csv(out_path);
  if (!csv) throw std::runtime_error("cannot write " + out_path.string());
  fim::run_bench(spec, csv, std::cerr);
  std::cerr << "wrote " << out_path.string() << '\n';
  return 0;
}

struct GenArgs {
  std::string preset;
  std::string out;
  std::string out_dir = ".";
  bool all = false;
  bool list = false;
};

int cmd_gen(const GenArgs& args) {
  if (args.list) {
    for (const auto& name : fim::datagen::preset_names()) std::cout << name << '\n';
    return 0;
  }
  auto write = [](const std::string& name, const fs::path& path) {
    const fim::HorizontalDb db = fim::datagen::make_preset(name);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    fim::serialize(db, out);
    std::cout << path.string() << ": " << db.n_transactions() << " transactions, " << db.dim()
              << " items\n";
  };
  if (args.all) {
    const fs::path dir = resolve_output(args.out_dir);
    fs::create_directories(dir);
    for (const auto& name : fim::datagen::preset_names()) write(name, dir / (name + ".dat"));
    return 0;
  }
  if (args.preset.empty()) throw std::invalid_argument("gen needs --preset, --all or --list");
  const std::string out = args.out.empty() ? args.preset + ".dat" : args.out;
  write(args.preset, resolve_output(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel frequent itemset mining over prefix equivalence classes"};
  app.require_subcommand(1);

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine one dataset and write the itemsets");
  mine_cmd->add_option("--input", mine.input, "transaction file, one per line")->required();
  mine_cmd->add_option("--variant", mine.variant, "v1|v2|v3|v4|v5|apriori|oracle");
  mine_cmd->add_option("--min-sup", mine.min_sup, "fraction in (0,1] or absolute count")
      ->required();
  mine_cmd->add_option("--partitions", mine.partitions, "class partitions for v4/v5");
  mine_cmd->add_option("--workers", mine.workers, "worker threads");
  mine_cmd->add_option("--tri-matrix", mine.tri_matrix, "on|off|auto");
  mine_cmd->add_option("--matrix-guard-mb", mine.guard_mb, "pair-matrix memory guard");
  mine_cmd->add_option("--output", mine.output, "itemset output file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep a benchmark grid, emit CSV");
  bench_cmd->add_option("--input", bench.inputs, "dataset files or preset names")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--variants", bench.variants, "variants to run")->delimiter(',');
  bench_cmd->add_option("--min-sup", bench.min_sups, "thresholds to sweep")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--workers", bench.workers, "worker counts to sweep")->delimiter(',');
  bench_cmd->add_option("--replicate", bench.replications, "replication factors")->delimiter(',');
  bench_cmd->add_option("--partitions", bench.partitions, "p for v4/v5");
  bench_cmd->add_option("--tri-matrix", bench.tri_matrix, "on|off|auto");
  bench_cmd->add_option("--repeat", bench.repeat, "repetitions per cell");
  bench_cmd->add_flag("--warmup", bench.warmup, "one unrecorded warmup run per cell");
  bench_cmd->add_option("--out", bench.out_csv, "CSV path (default stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic benchmark dataset");
  gen_cmd->add_option("--preset", gen.preset, "dataset name (see --list)");
  gen_cmd->add_option("--out", gen.out, "output file");
  gen_cmd->add_option("--out-dir", gen.out_dir, "directory for --all");
  gen_cmd->add_flag("--all", gen.all, "write every preset");
  gen_cmd->add_flag("--list", gen.list, "list preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(mine_cmd)) return cmd_mine(mine);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(bench);
    if (app.got_subcommand(gen_cmd)) return cmd_gen(gen);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
