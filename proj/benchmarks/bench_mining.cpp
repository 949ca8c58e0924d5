#include "galois/galois.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace galois;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(GALOIS_DATA_DIR) + "/" + name, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const FormalContext& zoo() {
  static const auto ctx = parse_context(read_data("zoo40.csv"), ContextFormat::csv);
  return ctx;
}

const FormalContext& courses() {
  static const auto ctx = parse_context(read_data("courses.csv"), ContextFormat::csv);
  return ctx;
}

const Thresholds zoo_thresholds{Rational(3, 10), Rational(1, 2)};

void BM_LatticeZoo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(zoo()));
}
BENCHMARK(BM_LatticeZoo)->Unit(benchmark::kMillisecond);

void BM_RulesZoo(benchmark::State& state) {
  const auto lat = build_lattice(zoo());
  for (auto _ : state) benchmark::DoNotOptimize(extract_rules(lat, zoo(), zoo_thresholds));
}
BENCHMARK(BM_RulesZoo)->Unit(benchmark::kMillisecond);

void BM_WorkspaceZoo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_workspace(zoo(), zoo_thresholds));
}
BENCHMARK(BM_WorkspaceZoo)->Unit(benchmark::kMillisecond);

void BM_HHierarchyCourses(benchmark::State& state) {
  const auto tax = parse_taxonomy(read_data("courses.taxonomy"), courses());
  const Thresholds th{Rational(1, 2), Rational(1, 2)};
  const auto rb = extract_rules(build_lattice(courses()), courses(), th);
  std::vector<AssociationRule> seeds;
  for (const auto& r : rb.rules())
    if (!r.premise.empty()) seeds.push_back(r);
  for (auto _ : state) benchmark::DoNotOptimize(build_h_hierarchy(seeds, tax, courses(), th));
}
BENCHMARK(BM_HHierarchyCourses)->Unit(benchmark::kMicrosecond);

void BM_HHierarchyZoo(benchmark::State& state) {
  const auto tax = parse_taxonomy(read_data("zoo40.taxonomy"), zoo());
  const auto rb = extract_rules(build_lattice(zoo()), zoo(), zoo_thresholds);
  std::vector<AssociationRule> seeds;
  for (const auto& r : rb.rules())
    if (r.premise.size() == 1 && r.conclusion.size() == 1) seeds.push_back(r);
  for (auto _ : state) benchmark::DoNotOptimize(build_h_hierarchy(seeds, tax, zoo(), zoo_thresholds));
  state.counters["seeds"] = static_cast<double>(seeds.size());
}
BENCHMARK(BM_HHierarchyZoo)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
