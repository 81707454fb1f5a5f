#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>

namespace radixplan {

enum class CostSource { benchmarked, loaded };

/// Per-(stage, radix) abstract cost of one butterfly pass of that radix
/// starting at that log2 stage of a 2^n transform. Complete when every
/// (s, r) with s + log2(r) <= n is present, and only those.
struct CostTable {
  int n = 0;
  std::map<std::pair<int, int>, double> entries;  // (stage, radix) -> cost
  CostSource source = CostSource::benchmarked;

  // metadata
  std::string label;
  std::string timestamp;
  std::string units = "cost units";
  int warmup_runs = 0;
  int measured_runs = 0;
  int batch_per_run = 0;
  std::uint64_t seed = 0;

  double at(int stage, int radix) const;  // throws naming a missing pair
  bool has(int stage, int radix) const;

  /// Enforces completeness and positivity; throws listing every gap.
  void validate() const;
};

struct BenchConfig {
  int warmup_runs = 5;
  int measured_runs = 31;
  enum class Aggregate { median, minimum };
  Aggregate aggregate = Aggregate::median;
  /// Stage invocations timed together per measured run; a single stage pass
  /// is far below timer granularity on current hosts.
  int batch_per_run = 256;
  std::uint64_t seed = 1;
  std::string label = "host";
};

/// Number of distinct stage experiments for radix set {2,4,8}: 3(n-1).
int experiment_budget(int n);

/// Times every (stage, radix) kernel of a 2^n transform on this host and
/// returns the complete table. Runs strictly single-threaded; keep the
/// machine otherwise idle.
CostTable benchmark_stages(int n, const BenchConfig& config = {});

/// CSV with header `stage,radix,cost`; metadata goes to a `.json` sidecar
/// next to the file.
void save_cost_table(const CostTable& table, const std::filesystem::path& csv_path);

/// Loads and validates a table; source becomes CostSource::loaded.
CostTable load_cost_table(const std::filesystem::path& csv_path);

}  // namespace radixplan
