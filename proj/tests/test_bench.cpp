#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fim/bench.hpp"

using namespace fim;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::size_t count_fields(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

const char* kTinyDb = "1 2 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_CASE("bench sweeps the full grid and keeps a stable schema") {
  const std::string path = "bench_tiny.dat";
  {
    std::ofstream out(path);
    out << kTinyDb;
  }

  BenchSpec spec;
  spec.datasets = {path};
  spec.variants = {Variant::kV1, Variant::kV2, Variant::kV3, Variant::kV4, Variant::kV5,
                   Variant::kApriori};
  spec.min_sups = {SupportThreshold::of_count(2)};
  spec.worker_counts = {1, 2};
  spec.repeat = 2;

  std::ostringstream csv;
  std::ostringstream log;
  run_bench(spec, csv, log);

  const auto lines = split_lines(csv.str());
  REQUIRE(lines.size() == 1 + 6 * 2 * 2);
  CHECK(lines[0] == kBenchCsvHeader);
  const std::size_t n_fields = count_fields(lines[0]);
  for (const auto& line : lines) CHECK(count_fields(line) == n_fields);

  // Itemset count column is constant across variants, workers and repeats.
  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::istringstream row(lines[r]);
    std::string field;
    for (int f = 0; f < 13; ++f) std::getline(row, field, ',');
    CHECK(field == "6");
  }
  CHECK_FALSE(log.str().empty());
  std::remove(path.c_str());
}

TEST_CASE("five variants across five worker counts give a 25-row report") {
  BenchSpec spec;
  spec.datasets = {"mushroom"};
  spec.variants = {Variant::kV1, Variant::kV2, Variant::kV3, Variant::kV4, Variant::kV5};
  spec.min_sups = {SupportThreshold::of_fraction(0.15)};
  spec.worker_counts = {2, 4, 6, 8, 10};

  std::ostringstream csv;
  std::ostringstream log;
  run_bench(spec, csv, log);
  const auto lines = split_lines(csv.str());
  CHECK(lines.size() == 1 + 25);
}

TEST_CASE("bench accepts generator presets and replication factors") {
  BenchSpec spec;
  spec.datasets = {"chess"};
  spec.variants = {Variant::kV4};
  spec.min_sups = {SupportThreshold::of_fraction(0.9)};
  spec.replications = {1, 2};

  std::ostringstream csv;
  std::ostringstream log;
  run_bench(spec, csv, log);
  const auto lines = split_lines(csv.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[1].starts_with("chess,v4,0.9,1,1,"));
  CHECK(lines[2].starts_with("chess,v4,0.9,1,2,"));
}

TEST_CASE("bench rejects an empty spec") {
  BenchSpec spec;
  std::ostringstream csv;
  std::ostringstream log;
  CHECK_THROWS_AS(run_bench(spec, csv, log), bench_error);
}
