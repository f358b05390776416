#include "fim/pipelines.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ostream>
#include <sstream>

#include "fim/counting.hpp"
#include "fim/eclat.hpp"
#include "fim/partitioning.hpp"
#include "fim/vertical.hpp"

namespace fim {

Variant parse_variant(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "v1") return Variant::kV1;
  if (s == "v2") return Variant::kV2;
  if (s == "v3") return Variant::kV3;
  if (s == "v4") return Variant::kV4;
  if (s == "v5") return Variant::kV5;
  if (s == "apriori") return Variant::kApriori;
  if (s == "oracle") return Variant::kOracle;
  throw std::invalid_argument("unknown variant: " + name);
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::kV1: return "v1";
    case Variant::kV2: return "v2";
    case Variant::kV3: return "v3";
    case Variant::kV4: return "v4";
    case Variant::kV5: return "v5";
    case Variant::kApriori: return "apriori";
    case Variant::kOracle: return "oracle";
  }
  return "?";
}

TriMatrixMode parse_tri_matrix_mode(const std::string& name) {
  if (name == "off") return TriMatrixMode::kOff;
  if (name == "on") return TriMatrixMode::kOn;
  if (name == "auto") return TriMatrixMode::kAuto;
  throw std::invalid_argument("unknown tri-matrix mode: " + name);
}

const char* to_string(TriMatrixMode m) {
  switch (m) {
    case TriMatrixMode::kOff: return "off";
    case TriMatrixMode::kOn: return "on";
    case TriMatrixMode::kAuto: return "auto";
  }
  return "?";
}

namespace {

class PhaseTimer {
 public:
  explicit PhaseTimer(RunMetrics& metrics) : metrics_(metrics) {}

  void lap(const std::string& name) {
    const auto now = Clock::now();
    metrics_.phases.push_back({name, std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

  void finish() {
    metrics_.total_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  RunMetrics& metrics_;
  Clock::time_point start_ = Clock::now();
  Clock::time_point last_ = start_;
};

// The matrix is an optimization with a memory guard; "on" and "auto" both
// fall back to intersections when the guard trips.
TriangularMatrix maybe_build_matrix(const HorizontalDb& db, const MiningConfig& cfg) {
  if (cfg.tri_matrix == TriMatrixMode::kOff) return TriangularMatrix{};
  return build_tri_matrix(db, db.dim(), cfg.workers, cfg.matrix_guard_bytes);
}

void canonicalize(std::vector<CountedItemset>& itemsets) {
  std::sort(itemsets.begin(), itemsets.end(), canonical_less);
}

// Emits the already-certified 1- and 2-itemsets, then mines every class
// sublattice, one partition per task.
void mine_classes(const VerticalDb& ordered, std::uint64_t min_sup, const TriangularMatrix* matrix,
                  PartitionScheme scheme, unsigned p, unsigned workers, MiningResult& result) {
  for (const auto& entry : ordered.entries) {
    result.itemsets.push_back({{entry.item}, entry.support()});
  }

  auto classes = build_equivalence_classes(ordered, min_sup, matrix, workers);
  for (const auto& ec : classes) {
    for (const auto& m : ec.members) {
      Itemset pair{ec.prefix, m.item};
      if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
      result.itemsets.push_back({std::move(pair), m.support()});
    }
  }

  if (classes.empty()) {
    canonicalize(result.itemsets);
    return;
  }

  const unsigned plan_p = scheme == PartitionScheme::kDefault
                              ? static_cast<unsigned>(classes.size())
                              : p;
  PartitionPlan plan = plan_partitions(classes, scheme, plan_p);
  result.metrics.partition_workloads = plan.workloads;

  std::vector<std::vector<unsigned>> ranks_of(plan.p);
  for (unsigned v = 0; v < plan.assignment.size(); ++v) {
    ranks_of[plan.assignment[v]].push_back(v);
  }

  const unsigned w = std::max(1u, workers);
  (void)w;
  std::vector<std::vector<CountedItemset>> buffers(plan.p);
#pragma omp parallel for num_threads(w) schedule(dynamic)
  for (unsigned part = 0; part < plan.p; ++part) {
    for (unsigned v : ranks_of[part]) {
      bottom_up(classes[v], min_sup, buffers[part]);
    }
  }
  for (auto& buf : buffers) {
    result.itemsets.insert(result.itemsets.end(), std::make_move_iterator(buf.begin()),
                           std::make_move_iterator(buf.end()));
  }
  canonicalize(result.itemsets);
}

double reduction_pct(std::uint64_t before, std::uint64_t after) {
  if (before == 0) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(after) / static_cast<double>(before));
}

// Worker-local vertical maps over transaction ranges, merged by tidset union
// in worker order. Equivalent to the direct inversion; kept as a separate
// path because V3+ are specified against the merge contract.
VerticalDb build_vertical_merged(const HorizontalDb& db, unsigned workers) {
  const unsigned w = std::max(1u, workers);
  const std::size_t dim = db.dim();
  std::vector<std::vector<TidSet>> partial(w, std::vector<TidSet>(dim));

#pragma omp parallel for num_threads(w) schedule(static, 1)
  for (unsigned c = 0; c < w; ++c) {
    auto& local = partial[c];
    const std::size_t lo = db.n_transactions() * c / w;
    const std::size_t hi = db.n_transactions() * (c + 1) / w;
    for (std::size_t t = lo; t < hi; ++t) {
      const auto tid = static_cast<Tid>(t + 1);
      for (ItemId i : db.transactions[t]) local[i].push_back(tid);
    }
  }

  std::vector<TidSet> merged(dim);
  for (unsigned c = 0; c < w; ++c) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (partial[c][i].empty()) continue;
      if (merged[i].empty()) {
        merged[i] = std::move(partial[c][i]);
        continue;
      }
      TidSet unioned;
      unioned.reserve(merged[i].size() + partial[c][i].size());
      std::set_union(merged[i].begin(), merged[i].end(), partial[c][i].begin(),
                     partial[c][i].end(), std::back_inserter(unioned));
      merged[i] = std::move(unioned);
    }
  }

  VerticalDb v;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!merged[i].empty()) v.entries.push_back({static_cast<ItemId>(i), std::move(merged[i])});
  }
  return v;
}

// Shared Phase-1..3 of the filtered-transaction pipelines; V2 inverts the
// filtered database directly, V3+ go through the merged-map path.
struct FilteredStages {
  HorizontalDb filtered;
  VerticalDb ordered;
  TriangularMatrix matrix;
  std::uint64_t min_sup = 0;
};

FilteredStages filtered_pipeline_stages(const HorizontalDb& db, const MiningConfig& cfg,
                                        bool merged_map, PhaseTimer& timer, RunMetrics& metrics) {
  FilteredStages st;
  st.min_sup = resolve_min_sup(cfg.min_sup, db.n_transactions());

  const ItemCounts counts = count_items(db, cfg.workers);
  const std::vector<ItemId> freq = frequent_items(counts, st.min_sup);
  timer.lap("count");

  st.filtered = filter_transactions(db, freq);
  metrics.filtered_reduction_pct =
      reduction_pct(total_occurrences(db), total_occurrences(st.filtered));
  st.matrix = maybe_build_matrix(st.filtered, cfg);
  timer.lap("filter+matrix");

  st.ordered = merged_map ? build_vertical_merged(st.filtered, cfg.workers)
                          : build_vertical(st.filtered);
  order_by_support(st.ordered);
  timer.lap("vertical");
  return st;
}

MiningResult run_filtered_variant(const HorizontalDb& db, const MiningConfig& cfg,
                                  bool merged_map, PartitionScheme scheme) {
  MiningResult result;
  PhaseTimer timer(result.metrics);
  FilteredStages st = filtered_pipeline_stages(db, cfg, merged_map, timer, result.metrics);
  result.metrics.resolved_min_sup = st.min_sup;

  const TriangularMatrix* matrix = st.matrix.enabled() ? &st.matrix : nullptr;
  mine_classes(st.ordered, st.min_sup, matrix, scheme, cfg.p, cfg.workers, result);
  timer.lap("mine");
  timer.finish();
  return result;
}

}  // namespace

MiningResult run_v1(const HorizontalDb& db, const MiningConfig& cfg) {
  MiningResult result;
  PhaseTimer timer(result.metrics);
  const std::uint64_t min_sup = resolve_min_sup(cfg.min_sup, db.n_transactions());
  result.metrics.resolved_min_sup = min_sup;

  // Vertical database straight from the raw transactions; infrequent entries
  // are produced and then dropped by the support filter.
  VerticalDb ordered = build_vertical(db);
  filter_by_support(ordered, min_sup);
  order_by_support(ordered);
  timer.lap("vertical");

  // The pair matrix is counted over the raw transactions in this variant.
  TriangularMatrix matrix = maybe_build_matrix(db, cfg);
  timer.lap("matrix");

  mine_classes(ordered, min_sup, matrix.enabled() ? &matrix : nullptr, PartitionScheme::kDefault,
               cfg.p, cfg.workers, result);
  timer.lap("mine");
  timer.finish();
  return result;
}

MiningResult run_v2(const HorizontalDb& db, const MiningConfig& cfg) {
  return run_filtered_variant(db, cfg, /*merged_map=*/false, PartitionScheme::kDefault);
}

MiningResult run_v3(const HorizontalDb& db, const MiningConfig& cfg) {
  return run_filtered_variant(db, cfg, /*merged_map=*/true, PartitionScheme::kDefault);
}

MiningResult run_v4(const HorizontalDb& db, const MiningConfig& cfg) {
  if (cfg.p == 0) throw std::invalid_argument("v4 requires p >= 1");
  return run_filtered_variant(db, cfg, /*merged_map=*/true, PartitionScheme::kHash);
}

MiningResult run_v5(const HorizontalDb& db, const MiningConfig& cfg) {
  if (cfg.p == 0) throw std::invalid_argument("v5 requires p >= 1");
  return run_filtered_variant(db, cfg, /*merged_map=*/true, PartitionScheme::kReverseHash);
}

MiningResult run(const HorizontalDb& db, const MiningConfig& cfg) {
  switch (cfg.variant) {
    case Variant::kV1: return run_v1(db, cfg);
    case Variant::kV2: return run_v2(db, cfg);
    case Variant::kV3: return run_v3(db, cfg);
    case Variant::kV4: return run_v4(db, cfg);
    case Variant::kV5: return run_v5(db, cfg);
    case Variant::kApriori: return run_apriori(db, cfg);
    case Variant::kOracle: return run_oracle(db, cfg);
  }
  throw std::invalid_argument("unknown variant");
}

void write_spmf(const MiningResult& result, const HorizontalDb& db, std::ostream& out) {
  for (const auto& ci : result.itemsets) {
    for (std::size_t k = 0; k < ci.items.size(); ++k) {
      if (k) out << ' ';
      out << db.item_names[ci.items[k]];
    }
    out << " #SUP: " << ci.support << '\n';
  }
}

std::string to_spmf(const MiningResult& result, const HorizontalDb& db) {
  std::ostringstream os;
  write_spmf(result, db, os);
  return os.str();
}

bool same_itemsets(const MiningResult& a, const MiningResult& b) {
  return a.itemsets == b.itemsets;
}

}  // namespace fim
