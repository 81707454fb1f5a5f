#include "radixplan/cost_model.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "radixplan/fft.hpp"

namespace radixplan {

namespace {

constexpr int kRadixes[] = {2, 4, 8};

int radix_log2(int radix) { return radix == 2 ? 1 : radix == 4 ? 2 : 3; }

std::string pair_name(int stage, int radix) {
  return "(stage " + std::to_string(stage) + ", radix " + std::to_string(radix) + ")";
}

std::string now_iso8601() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

// Smallest observable tick of the steady clock, in nanoseconds.
double steady_clock_resolution_ns() {
  using clock = std::chrono::steady_clock;
  double best = 1e9;
  for (int i = 0; i < 64; ++i) {
    auto t0 = clock::now();
    auto t1 = clock::now();
    while (t1 == t0) t1 = clock::now();
    best = std::min(best, std::chrono::duration<double, std::nano>(t1 - t0).count());
  }
  return std::max(best, 1.0);
}

}  // namespace

double CostTable::at(int stage, int radix) const {
  auto it = entries.find({stage, radix});
  if (it == entries.end())
    throw std::invalid_argument("missing cost entry for " + pair_name(stage, radix));
  return it->second;
}

bool CostTable::has(int stage, int radix) const { return entries.contains({stage, radix}); }

void CostTable::validate() const {
  if (n < 1) throw std::invalid_argument("cost table has no stages");
  std::string gaps;
  for (int radix : kRadixes) {
    for (int stage = 0; stage + radix_log2(radix) <= n; ++stage) {
      if (!has(stage, radix)) gaps += (gaps.empty() ? "" : ", ") + pair_name(stage, radix);
    }
  }
  if (!gaps.empty()) throw std::invalid_argument("cost table incomplete, missing " + gaps);
  for (const auto& [key, cost] : entries) {
    const auto [stage, radix] = key;
    if (radix != 2 && radix != 4 && radix != 8)
      throw std::invalid_argument("unsupported radix " + std::to_string(radix) + " in cost table");
    if (stage < 0 || stage + radix_log2(radix) > n)
      throw std::invalid_argument("entry " + pair_name(stage, radix) +
                                  " exceeds transform size (log2 N = " + std::to_string(n) + ")");
    if (!(cost > 0.0) || !std::isfinite(cost))
      throw std::invalid_argument("non-positive cost at " + pair_name(stage, radix));
  }
}

int experiment_budget(int n) {
  if (n < 3) throw std::invalid_argument("experiment budget needs n >= 3");
  return 3 * (n - 1);
}

CostTable benchmark_stages(int n, const BenchConfig& config) {
  if (n < 4 || n > 14) throw std::invalid_argument("benchmark supports n between 4 and 14");
  if (config.measured_runs < 3) throw std::invalid_argument("need at least 3 measured runs");
  if (config.batch_per_run < 1) throw std::invalid_argument("batch_per_run must be >= 1");

  using clock = std::chrono::steady_clock;
  const std::size_t size = std::size_t{1} << n;
  const auto batch = static_cast<std::size_t>(config.batch_per_run);
  const double resolution_ns = steady_clock_resolution_ns();

  // One pristine random block per experiment; the working copy is refreshed
  // outside the timed region so repeated passes never feed the kernel
  // overflow-grown values.
  std::vector<ComplexSample> pristine(batch * size);
  std::vector<ComplexSample> working(batch * size);

  CostTable table;
  table.n = n;
  table.source = CostSource::benchmarked;
  table.label = config.label;
  table.timestamp = now_iso8601();
  table.units = "cost units (median ns per stage pass)";
  table.warmup_runs = config.warmup_runs;
  table.measured_runs = config.measured_runs;
  table.batch_per_run = config.batch_per_run;
  table.seed = config.seed;

  const TwiddleTable twiddles = TwiddleTable::make(size, Direction::forward);

  std::uint64_t experiment_seed = config.seed;
  for (int radix : kRadixes) {
    for (int stage = 0; stage + radix_log2(radix) <= n; ++stage) {
      const Signal fresh = random_signal(size, experiment_seed++);
      for (std::size_t b = 0; b < batch; ++b)
        std::copy(fresh.begin(), fresh.end(), pristine.begin() + b * size);

      std::vector<double> samples;
      samples.reserve(static_cast<std::size_t>(config.measured_runs));
      const int total_runs = config.warmup_runs + config.measured_runs;
      for (int run = 0; run < total_runs; ++run) {
        std::copy(pristine.begin(), pristine.end(), working.begin());
        const auto t0 = clock::now();
        for (std::size_t b = 0; b < batch; ++b) {
          apply_radix_stage(std::span(working).subspan(b * size, size), radix, stage, twiddles);
        }
        const auto t1 = clock::now();
        if (run >= config.warmup_runs)
          samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
      }

      std::sort(samples.begin(), samples.end());
      const double batch_ns = config.aggregate == BenchConfig::Aggregate::median
                                  ? samples[samples.size() / 2]
                                  : samples.front();
      if (batch_ns < 100.0 * resolution_ns)
        throw std::runtime_error("timer resolution too coarse for stage " +
                                 std::to_string(stage) + " radix " + std::to_string(radix) +
                                 "; increase batch_per_run");
      table.entries[{stage, radix}] = batch_ns / static_cast<double>(batch);
    }
  }

  table.validate();
  return table;
}

void save_cost_table(const CostTable& table, const std::filesystem::path& csv_path) {
  table.validate();
  std::ofstream out(csv_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + csv_path.string());
  out << "stage,radix,cost\n";
  for (const auto& [key, cost] : table.entries)
    out << key.first << ',' << key.second << ',' << format_double(cost) << '\n';
  if (!out.flush()) throw std::runtime_error("write failed for " + csv_path.string());

  nlohmann::json meta;
  meta["label"] = table.label;
  meta["n"] = table.n;
  meta["source"] = table.source == CostSource::benchmarked ? "benchmarked" : "loaded";
  meta["units"] = table.units;
  meta["warmup_runs"] = table.warmup_runs;
  meta["measured_runs"] = table.measured_runs;
  meta["batch_per_run"] = table.batch_per_run;
  meta["seed"] = table.seed;
  meta["timestamp"] = table.timestamp;
  std::ofstream side(sidecar_path(csv_path), std::ios::trunc);
  if (!side) throw std::runtime_error("cannot write " + sidecar_path(csv_path).string());
  side << meta.dump(2) << '\n';
  if (!side.flush()) throw std::runtime_error("write failed for " + sidecar_path(csv_path).string());
}

CostTable load_cost_table(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path.string());

  CostTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty cost table file");
  // header: stage,radix,cost
  int max_extent = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string stage_s, radix_s, cost_s;
    if (!std::getline(row, stage_s, ',') || !std::getline(row, radix_s, ',') ||
        !std::getline(row, cost_s))
      throw std::invalid_argument("bad row at line " + std::to_string(line_no) + " of " +
                                  csv_path.string());
    int stage = 0, radix = 0;
    double cost = 0.0;
    try {
      stage = std::stoi(stage_s);
      radix = std::stoi(radix_s);
      cost = std::stod(cost_s);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad row at line " + std::to_string(line_no) + " of " +
                                  csv_path.string());
    }
    if (cost < 0.0)
      throw std::invalid_argument("negative cost at " + pair_name(stage, radix));
    if (table.has(stage, radix))
      throw std::invalid_argument("duplicate entry for " + pair_name(stage, radix));
    table.entries[{stage, radix}] = cost;
    if (radix == 2 || radix == 4 || radix == 8)
      max_extent = std::max(max_extent, stage + radix_log2(radix));
  }
  table.n = max_extent;
  table.source = CostSource::loaded;
  table.label = csv_path.stem().string();

  const auto side = sidecar_path(csv_path);
  if (std::filesystem::exists(side)) {
    std::ifstream meta_in(side);
    nlohmann::json meta = nlohmann::json::parse(meta_in, nullptr, true);
    if (meta.contains("n")) table.n = meta["n"].get<int>();
    if (meta.contains("label")) table.label = meta["label"].get<std::string>();
    if (meta.contains("units")) table.units = meta["units"].get<std::string>();
    if (meta.contains("warmup_runs")) table.warmup_runs = meta["warmup_runs"].get<int>();
    if (meta.contains("measured_runs")) table.measured_runs = meta["measured_runs"].get<int>();
    if (meta.contains("batch_per_run")) table.batch_per_run = meta["batch_per_run"].get<int>();
    if (meta.contains("seed")) table.seed = meta["seed"].get<std::uint64_t>();
    if (meta.contains("timestamp")) table.timestamp = meta["timestamp"].get<std::string>();
  }

  table.validate();
  return table;
}

}  // namespace radixplan
